"""OEIS sequence search with a local response cache.

Lookups default to offline mode, which reads only the fixtures bundled with
the package and the on-disk cache.  Live queries are sequential and limited
to one request per second.  Response files are named by the SHA-256 of the
query string (the comma-joined terms).
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Optional, Sequence

from .errors import NetworkUnavailable

SEARCH_URL = "https://oeis.org/search"
MIN_TERMS = 4
RATE_LIMIT_SECONDS = 1.0
MODES = ("offline", "auto", "online")

_rate_lock = threading.Lock()
_last_request = 0.0


@dataclass(frozen=True)
class Match:
    id: str
    name: str


@dataclass
class LookupResult:
    """``status`` is ``match``, ``no-match`` (the search answered with nothing)
    or ``failed`` (no answer could be obtained)."""

    query: str
    status: str
    matches: list = field(default_factory=list)
    provenance: str = "none"
    detail: str = ""

    def ids(self) -> list:
        return [m.id for m in self.matches]


def query_string(terms: Sequence[int]) -> str:
    if len(terms) < MIN_TERMS:
        raise ValueError(f"an OEIS lookup needs at least {MIN_TERMS} terms, got {len(terms)}")
    return ",".join(str(int(t)) for t in terms)


def query_hash(query: str) -> str:
    return hashlib.sha256(query.encode("ascii")).hexdigest()


def fixture_dir() -> Path:
    return Path(str(resources.files("dowling") / "data" / "oeis"))


def cache_dir() -> Path:
    env = os.environ.get("DOWLING_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "dowling" / "oeis"


def parse_response(payload) -> list:
    """Extract matches from an OEIS JSON answer.

    Older answers are an object with a ``results`` list (``null`` when empty),
    newer ones are a bare list.
    """
    if isinstance(payload, dict):
        results = payload.get("results") or []
    elif isinstance(payload, list):
        results = payload
    elif payload is None:
        results = []
    else:
        raise ValueError("unrecognized OEIS response")
    return [Match(f"A{int(r['number']):06d}", r.get("name", "")) for r in results]


def _read(directory: Path, query: str):
    path = directory / f"{query_hash(query)}.json"
    if not path.is_file():
        return None
    record = json.loads(path.read_text(encoding="utf-8"))
    if record.get("query") != query:
        return None
    return record


def _write_cache(query: str, payload, directory: Optional[Path] = None):
    directory = directory or cache_dir()
    try:
        directory.mkdir(parents=True, exist_ok=True)
        record = {"query": query, "provenance": "live", "response": payload}
        text = json.dumps(record, indent=1, sort_keys=True)
        (directory / f"{query_hash(query)}.json").write_text(text + "\n", encoding="utf-8")
    except OSError:
        pass


def _http_get(query: str, timeout: float = 10.0):
    url = f"{SEARCH_URL}?{urllib.parse.urlencode({'q': query, 'fmt': 'json'})}"
    req = urllib.request.Request(url, headers={"User-Agent": "dowling-oeis-client"})
    with urllib.request.urlopen(req, timeout=timeout) as resp:
        return json.loads(resp.read().decode("utf-8"))


def _rate_limited(fetch: Callable, query: str):
    global _last_request
    with _rate_lock:
        wait = RATE_LIMIT_SECONDS - (time.monotonic() - _last_request)
        if wait > 0:
            time.sleep(wait)
        try:
            return fetch(query)
        finally:
            _last_request = time.monotonic()


def _from_record(query, record, provenance):
    matches = parse_response(record.get("response"))
    status = "match" if matches else "no-match"
    return LookupResult(query, status, matches, provenance, record.get("provenance", ""))


def _offline(query: str) -> LookupResult:
    for directory, label in ((fixture_dir(), "fixture"), (cache_dir(), "cache")):
        record = _read(directory, query)
        if record is not None:
            return _from_record(query, record, label)
    return LookupResult(query, "failed", [], "none", "no fixture or cached response for this query")


def oeis_lookup(terms: Sequence[int], mode: str = "offline", fetch: Optional[Callable] = None) -> LookupResult:
    """Search OEIS for ``terms``.

    offline: fixtures and cache only.  auto: cache, then live, falling back to
    fixtures when the network fails.  online: live only, raising
    NetworkUnavailable on failure.  ``fetch`` replaces the HTTP call (tests).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    query = query_string(terms)
    if mode == "offline":
        return _offline(query)
    if mode == "auto":
        record = _read(cache_dir(), query)
        if record is not None:
            return _from_record(query, record, "cache")
    try:
        payload = _rate_limited(fetch or _http_get, query)
        matches = parse_response(payload)
    except (urllib.error.URLError, OSError, ValueError, KeyError, TypeError) as exc:
        if mode == "online":
            raise NetworkUnavailable(f"OEIS lookup failed: {exc}") from exc
        result = _offline(query)
        result.detail = f"network failure ({exc}); {result.detail or 'offline data used'}"
        return result
    _write_cache(query, payload)
    return LookupResult(query, "match" if matches else "no-match", matches, "live")
