"""
Command-line interface for the dowling package.

Usage:
    dowling table R --m formal --t 1 --n 4      # R-polynomial triangle, m formal
    dowling table stirling2 --n 4               # Stirling numbers of the second kind
    dowling poly dowling --m 2 --n-max 4        # Dowling polynomials
    dowling seq dowling-number --m 2 --count 5  # 1 2 6 24 116
    dowling verify table1                       # run one suite (or `all`)
    dowling hankel dowling --m 2 --n-max 4      # Hankel determinants
    dowling congruence --n-max 5                # n! divisibility certificates
    dowling oeis 1 2 6 24 116                   # offline OEIS lookup

Every subcommand accepts --format plain|csv|json.  Options fall back to
DOWLING_* environment variables (DOWLING_FORMAT, DOWLING_N_MAX, DOWLING_M,
DOWLING_R, DOWLING_T, DOWLING_X, DOWLING_OEIS_MODE, DOWLING_JOBS) and then to
built-in defaults.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 external
service failure.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import click

from . import __version__
from .congruences import cong_certificate, dowling_number
from .errors import DivisibilityFailure, DowlingError, NetworkUnavailable
from .families import POLY_FAMILIES, bell_number, family_poly, fubini_number
from .oeis import MODES, oeis_lookup
from .ring import Poly, as_rat, format_scalar, poly_eval
from .suites import REGISTRY, run_suite
from .transforms import SEQUENCES, hankel_transform
from .triangles import (
    eulerian,
    eulerian_dowling,
    r_stirling2,
    r_triangle,
    r_whitney2,
    stirling1,
    stirling2,
    whitney1,
    whitney2,
)

FORMATS = ("plain", "csv", "json")
EXACT_INT_LIMIT = 2**53

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_EXTERNAL = 0, 1, 2, 3


# --- serialization -----------------------------------------------------------

def to_json(value):
    """Lossless JSON form: big ints as strings, rationals as [num, den],
    polynomials as coefficient lists, lowest degree first."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) <= EXACT_INT_LIMIT else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return to_json(value.numerator)
        return [to_json(value.numerator), to_json(value.denominator)]
    if isinstance(value, Poly):
        return [to_json(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): to_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json(v) for v in value]
    return str(value)


def text(value) -> str:
    if isinstance(value, (int, Fraction, Poly)):
        return format_scalar(value)
    return str(value)


def render(fmt, command, params, data, rows, provenance=None, header=None):
    if fmt == "json":
        envelope = {
            "command": command,
            "params": to_json(params),
            "data": to_json(data),
            "provenance": provenance or {"package": "dowling", "version": __version__, "arithmetic": "exact"},
        }
        return json.dumps(envelope, sort_keys=True) + "\n"
    cells = [[text(c) for c in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    if not cells:
        return ""
    widths = [0] * max(len(r) for r in cells)
    for row in cells:
        for i, c in enumerate(row):
            widths[i] = max(widths[i], len(c))
    lines = ["  ".join(c.rjust(widths[i]) for i, c in enumerate(row)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


# --- option parsing ----------------------------------------------------------

def parse_m(value, allow_formal=False):
    if value is None:
        return None
    if value == "formal":
        if not allow_formal:
            raise click.BadParameter("m cannot be formal here", param_hint="--m")
        return Poly.variable("m")
    try:
        m = int(value)
    except ValueError:
        raise click.BadParameter(f"expected a positive integer or 'formal', got {value!r}", param_hint="--m")
    if m < 1:
        raise click.BadParameter("m must be at least 1", param_hint="--m")
    return m


def parse_t(value):
    if value is None:
        return 1
    if value == "formal":
        return Poly.variable("t")
    return parse_rat(value, "--t")


def parse_rat(value, hint="--x"):
    if value is None:
        return None
    try:
        return as_rat(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise click.BadParameter(f"expected a rational p/q, got {value!r}", param_hint=hint)


def resolve_format(ctx, fmt):
    return fmt or (ctx.obj or {}).get("format") or "plain"


def common(*names):
    """Attach the shared options listed in ``names`` to a subcommand."""
    specs = {
        "format": click.option("--format", "fmt", type=click.Choice(FORMATS), default=None,
                               help="Output format (default plain)."),
        "n_max": click.option("--n-max", "--n", "n_max", type=click.IntRange(min=0), envvar="DOWLING_N_MAX",
                              default=None, help="Largest index n."),
        "m": click.option("--m", "m", type=str, envvar="DOWLING_M", default=None,
                          help="Group order m (a positive integer, or 'formal' where allowed)."),
        "r": click.option("--r", "r", type=click.IntRange(min=0), envvar="DOWLING_R", default=None,
                          help="r parameter of the r-families."),
        "t": click.option("--t", "t", type=str, envvar="DOWLING_T", default=None,
                          help="t for the R-polynomials: rational p/q or 'formal'."),
        "x": click.option("--x", "x", type=str, envvar="DOWLING_X", default=None,
                          help="Evaluation point, rational p/q."),
    }

    def deco(fn):
        for name in reversed(names):
            fn = specs[name](fn)
        return fn
    return deco


def library_errors(fn):
    """Turn invalid-argument errors from the library into usage errors."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except NetworkUnavailable as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(EXIT_EXTERNAL)
        except (DowlingError, ValueError, KeyError, TypeError) as exc:
            if isinstance(exc, DivisibilityFailure):
                raise
            raise click.UsageError(str(exc).strip("'\""))
    return wrapper


def need(value, name):
    if value is None:
        raise click.UsageError(f"this family needs --{name}")
    return value


# --- commands ----------------------------------------------------------------

@click.group()
@click.version_option(__version__, prog_name="dowling")
@click.option("--format", "fmt", type=click.Choice(FORMATS), envvar="DOWLING_FORMAT", default="plain",
              show_default=True, help="Default output format for every subcommand.")
@click.pass_context
def cli(ctx, fmt):
    """Whitney numbers of Dowling lattices: exact tables, polynomials and
    identity verification."""
    ctx.obj = {"format": fmt}


TRIANGLES = ("stirling1", "stirling2", "eulerian", "whitney1", "whitney2", "r-stirling2", "r-whitney2",
             "eulerian-dowling", "R")


def triangle_rows(family, n_max, m, r, t):
    if family == "R":
        m_spec = None if m is None else m
        return [(n, [r_triangle(n, k, m_spec, t) for k in range(n + 1)]) for n in range(n_max + 1)]
    if family in ("r-stirling2",):
        r = need(r, "r")
        return [(n, [r_stirling2(r, n, k) for k in range(n + 1)]) for n in range(r, r + n_max + 1)]
    simple = {"stirling1": stirling1, "stirling2": stirling2, "eulerian": eulerian}
    if family in simple:
        f = simple[family]
        return [(n, [f(n, k) for k in range(n + 1)]) for n in range(n_max + 1)]
    m = need(m, "m")
    if isinstance(m, Poly):
        raise click.UsageError(f"m cannot be formal for {family}")
    if family == "r-whitney2":
        r = need(r, "r")
        return [(n, [r_whitney2(m, r, n, k) for k in range(n + 1)]) for n in range(n_max + 1)]
    f = {"whitney1": whitney1, "whitney2": whitney2, "eulerian-dowling": eulerian_dowling}[family]
    return [(n, [f(m, n, k) for k in range(n + 1)]) for n in range(n_max + 1)]


@cli.command()
@click.argument("family", type=click.Choice(TRIANGLES))
@common("format", "n_max", "m", "r", "t")
@click.pass_context
@library_errors
def table(ctx, family, fmt, n_max, m, r, t):
    """Rows 0..n-max of a number triangle (the r-stirling2 rows start at n = r).

    For R, --m formal gives polynomials in m and --t formal polynomials in t.
    """
    n_max = 4 if n_max is None else n_max
    m_val = parse_m(m, allow_formal=(family == "R"))
    t_val = parse_t(t)
    rows = triangle_rows(family, n_max, m_val, r, t_val)
    params = {"family": family, "n_max": n_max, "m": m, "r": r, "t": t if family == "R" else None}
    data = [{"n": n, "row": row} for n, row in rows]
    header = ["n"] + [f"k={k}" for k in range(max((len(row) for _, row in rows), default=0))]
    click.echo(render(resolve_format(ctx, fmt), "table", params, data, [[n] + row for n, row in rows],
                      header=header), nl=False)


def _family_params(family, m, r):
    names = POLY_FAMILIES[family][1] if family in POLY_FAMILIES else SEQUENCES[family][1]
    params = {}
    if "m" in names:
        params["m"] = need(parse_m(m), "m")
    if "r" in names:
        params["r"] = need(r, "r")
    return params


@cli.command()
@click.argument("family", type=click.Choice(sorted(POLY_FAMILIES)))
@common("format", "n_max", "m", "r", "x")
@click.pass_context
@library_errors
def poly(ctx, family, fmt, n_max, m, r, x):
    """Members 0..n-max of a polynomial family, optionally evaluated at --x."""
    n_max = 4 if n_max is None else n_max
    params = _family_params(family, m, r)
    x_val = parse_rat(x)
    values = [family_poly(family, n, **params) for n in range(n_max + 1)]
    if x_val is not None:
        values = [poly_eval(p, x_val) for p in values]
    out_params = {"family": family, "n_max": n_max, **params, "x": x_val}
    rows = [[n, v] for n, v in enumerate(values)]
    click.echo(render(resolve_format(ctx, fmt), "poly", out_params, values, rows, header=["n", "value"]), nl=False)


SEQ_FAMILIES = ("bell", "fubini", "dowling-number") + tuple(f for f in sorted(POLY_FAMILIES) if f != "bell")


@cli.command()
@click.argument("family", type=click.Choice(SEQ_FAMILIES))
@click.option("--count", type=click.IntRange(min=0), default=10, show_default=True, help="Number of terms.")
@common("format", "m", "r", "x")
@click.pass_context
@library_errors
def seq(ctx, family, count, fmt, m, r, x):
    """First --count values of a sequence.

    bell, fubini and dowling-number are the integer sequences; any other
    polynomial family is evaluated at --x (default 1).
    """
    if family == "bell":
        params, values = {}, [bell_number(n) for n in range(count)]
    elif family == "fubini":
        params, values = {}, [fubini_number(n) for n in range(count)]
    elif family == "dowling-number":
        params = {"m": need(parse_m(m), "m")}
        values = [dowling_number(params["m"], n) for n in range(count)]
    else:
        params = _family_params(family, m, r)
        x_val = parse_rat(x)
        params["x"] = 1 if x_val is None else x_val
        values = [poly_eval(family_poly(family, n, **{k: v for k, v in params.items() if k != "x"}), params["x"])
                  for n in range(count)]
    fmt = resolve_format(ctx, fmt)
    out_params = {"family": family, "count": count, **params}
    if fmt == "plain":
        click.echo(" ".join(text(v) for v in values))
        return
    rows = [[n, v] for n, v in enumerate(values)]
    click.echo(render(fmt, "seq", out_params, values, rows, header=["n", "value"]), nl=False)


def _report_dict(rep):
    return {
        "suite": rep.suite,
        "passed": rep.passed,
        "expected_fail": rep.expected_fail,
        "bounds": rep.bounds,
        "checked": rep.checked,
        "failed": rep.failed,
        "description": rep.note,
        "failures": [
            {"instance": f.instance, "left": f.left, "right": f.right, "label": f.label} for f in rep.failures
        ],
    }


def _run_one(args):
    name, overrides = args
    return run_suite(name, **overrides)


def _parse_bounds(items):
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise click.BadParameter(f"expected key=value, got {item!r}", param_hint="--bound")
        try:
            out[key.strip().replace("-", "_")] = int(value)
        except ValueError:
            raise click.BadParameter(f"bound {key!r} needs an integer value", param_hint="--bound")
    return out


@cli.command()
@click.argument("suite", type=click.Choice(["all"] + list(REGISTRY)), metavar="SUITE")
@common("format", "n_max", "m", "r")
@click.option("--bound", "bounds", multiple=True, metavar="KEY=VALUE",
              help="Override any other suite bound, e.g. --bound N=8 or --bound i_max=10.")
@click.option("--jobs", type=click.IntRange(min=1), envvar="DOWLING_JOBS", default=1, show_default=True,
              help="Worker processes used by `verify all`.")
@click.pass_context
@library_errors
def verify(ctx, suite, fmt, n_max, m, r, bounds, jobs):
    """Run one verification suite, or all of them.

    Exit status is 0 when every suite passed.  An expected-fail suite passes
    when the printed identity it encodes is refuted.
    """
    overrides = _parse_bounds(bounds)
    if n_max is not None:
        overrides["n_max"] = n_max
    if m is not None:
        overrides["m_max"] = parse_m(m)
    if r is not None:
        overrides["r_max"] = r
    names = list(REGISTRY) if suite == "all" else [suite]
    tasks = [(name, overrides) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, tasks))
    else:
        reports = [_run_one(task) for task in tasks]
    fmt = resolve_format(ctx, fmt)
    data = [_report_dict(rep) for rep in reports]
    params = {"suite": suite, "overrides": overrides}
    if fmt == "plain":
        lines = []
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            tag = " (expected-fail)" if rep.expected_fail else ""
            lines.append(f"{status}  {rep.suite}{tag}  checked={rep.checked} failed={rep.failed}")
            cx = rep.counterexample
            if cx is not None:
                inst = ", ".join(f"{k}={v}" for k, v in cx.instance.items())
                label = f" [{cx.label}]" if cx.label else ""
                lines.append(f"    counterexample {inst}{label}: {text(cx.left)} != {text(cx.right)}")
        passed = sum(rep.passed for rep in reports)
        lines.append(f"{passed}/{len(reports)} suites passed")
        click.echo("\n".join(lines))
    else:
        rows = [[rep.suite, "pass" if rep.passed else "fail", rep.checked, rep.failed] for rep in reports]
        click.echo(render(fmt, "verify", params, data, rows, header=["suite", "status", "checked", "failed"]),
                   nl=False)
    ctx.exit(EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAILED)


HANKEL_FAMILIES = tuple(sorted(set(POLY_FAMILIES) | set(SEQUENCES)))


@cli.command()
@click.argument("family", type=click.Choice(HANKEL_FAMILIES))
@common("format", "n_max", "m", "r", "x")
@click.pass_context
@library_errors
def hankel(ctx, family, fmt, n_max, m, r, x):
    """Hankel determinants H_0..H_{n-max} of a family, optionally at --x."""
    n_max = 4 if n_max is None else n_max
    params = _family_params(family, m, r)
    x_val = parse_rat(x)
    if x_val is not None:
        params["x"] = x_val
    dets = hankel_transform(family, n_max, **params)
    rows = [[n, h] for n, h in enumerate(dets)]
    out_params = {"family": family, "n_max": n_max, **params}
    click.echo(render(resolve_format(ctx, fmt), "hankel", out_params, dets, rows, header=["n", "H_n"]), nl=False)


@cli.command()
@common("format", "n_max", "m", "t")
@click.option("--i-max", type=click.IntRange(min=0), default=8, show_default=True, help="Largest shift i.")
@click.pass_context
@library_errors
def congruence(ctx, fmt, n_max, m, t, i_max):
    """Certify that n! divides sum_k R_{n,k}(t) D_m(i+k, t).

    Without --m the orders 1..4 are used; without --t the values 1, 2, -1.
    """
    n_max = 6 if n_max is None else n_max
    ms = [parse_m(m)] if m is not None else [1, 2, 3, 4]
    if t is None:
        ts = [1, 2, -1]
    else:
        tv = parse_rat(t, "--t")
        if not isinstance(tv, int):
            raise click.BadParameter("t must be an integer for divisibility certificates", param_hint="--t")
        ts = [tv]
    certs, failures = [], []
    for n in range(n_max + 1):
        for i in range(i_max + 1):
            for mv in ms:
                for tv in ts:
                    try:
                        certs.append(cong_certificate(n, i, mv, tv))
                    except DivisibilityFailure as exc:
                        failures.append({"n": n, "i": i, "m": mv, "t": tv, "value": exc.value,
                                         "modulus": exc.modulus})
    fmt = resolve_format(ctx, fmt)
    params = {"n_max": n_max, "i_max": i_max, "m": ms, "t": ts}
    data = {
        "certificates": [{"n": c.n, "i": c.i, "m": c.m, "t": c.t, "value": c.value, "quotient": c.quotient}
                         for c in certs],
        "failures": failures,
    }
    rows = [[c.n, c.i, c.m, c.t, c.value, c.quotient] for c in certs]
    out = render(fmt, "congruence", params, data, rows, header=["n", "i", "m", "t", "value", "quotient"])
    if fmt == "plain":
        out += f"{len(certs)} certificates, {len(failures)} failures\n"
    click.echo(out, nl=False)
    ctx.exit(EXIT_OK if not failures else EXIT_FAILED)


@cli.command()
@click.argument("terms", nargs=-1, type=int, required=True)
@click.option("--offline", "mode", flag_value="offline", help="Bundled fixtures and local cache only (default).")
@click.option("--online", "mode", flag_value="online", help="Force a live query; fail if the network is down.")
@click.option("--auto", "mode", flag_value="auto", help="Cache, then live, then fixtures on network failure.")
@common("format")
@click.pass_context
@library_errors
def oeis(ctx, terms, mode, fmt):
    """Look up a sequence of at least four terms in the OEIS."""
    if len(terms) < 4:
        raise click.UsageError("an OEIS lookup needs at least 4 terms")
    mode = mode or os.environ.get("DOWLING_OEIS_MODE") or "offline"
    if mode not in MODES:
        raise click.UsageError(f"DOWLING_OEIS_MODE must be one of {', '.join(MODES)}")
    result = oeis_lookup(list(terms), mode=mode)
    fmt = resolve_format(ctx, fmt)
    provenance = {"source": result.provenance, "detail": result.detail, "mode": mode}
    data = {"status": result.status, "matches": [{"id": mt.id, "name": mt.name} for mt in result.matches]}
    if fmt == "plain":
        if result.status == "failed":
            click.echo(f"lookup failed: {result.detail}", err=True)
        elif result.status == "no-match":
            click.echo(f"no match ({result.provenance})")
        else:
            for mt in result.matches:
                click.echo(f"{mt.id}  {mt.name}")
            click.echo(f"source: {result.provenance}")
    else:
        rows = [[mt.id, mt.name] for mt in result.matches]
        click.echo(render(fmt, "oeis", {"terms": list(terms), "mode": mode}, data, rows, provenance,
                          header=["id", "name"]), nl=False)
    ctx.exit(EXIT_EXTERNAL if result.status == "failed" else EXIT_OK)


def main():
    cli(prog_name="dowling")


if __name__ == "__main__":
    main()
