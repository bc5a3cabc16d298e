"""Exact computation and verification of Whitney numbers of Dowling lattices
and the polynomial families built from them."""

__version__ = "0.1.0"

from .congruences import cong_certificate, dowling_number, gessel_sum
from .families import (
    bell,
    char_poly,
    dowling,
    euler_dowling_poly,
    eulerian_poly,
    geometric,
    r_bell,
    r_dowling,
    tanny_dowling,
)
from .ring import Poly
from .suites import run_all, run_suite
from .triangles import r_triangle, whitney1, whitney2

__all__ = [
    "Poly",
    "bell",
    "char_poly",
    "cong_certificate",
    "dowling",
    "dowling_number",
    "euler_dowling_poly",
    "eulerian_poly",
    "geometric",
    "gessel_sum",
    "r_bell",
    "r_dowling",
    "r_triangle",
    "run_all",
    "run_suite",
    "tanny_dowling",
    "whitney1",
    "whitney2",
]
