"""On-disk cache of exact q-expansions.

An entry is a JSON document {"schema": 1, "fn": name, "M": truncation,
"coeffs": [decimal strings]} stored as <dir>/<fn>_<M>.json.  Reads that fail
to parse or do not match their key are treated as misses: the expansion is
recomputed, the file overwritten, and a warning logged.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from .modular import eisenstein_q_coefficients, j_q_expansion

log = logging.getLogger(__name__)

CACHE_ENV = "CP2LG_CACHE_DIR"
SCHEMA = 1

COMPUTERS = {
    "E2": lambda M: eisenstein_q_coefficients(2, M),
    "E4": lambda M: eisenstein_q_coefficients(4, M),
    "E6": lambda M: eisenstein_q_coefficients(6, M),
    "j": lambda M: j_q_expansion(M),
}


class CacheCorrupt(Exception):
    pass


def cache_dir(override=None):
    """Directory from the argument, then the environment, then ~/.cache/cp2lg."""
    path = override or os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "cp2lg"
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def entry_path(directory, fn, M):
    return Path(directory) / f"{fn}_{int(M)}.json"


def encode_coeff(c):
    return str(c)


def decode_coeff(s):
    v = Fraction(s)
    return v.numerator if v.denominator == 1 else v


def make_entry(fn, M, coeffs):
    return {"schema": SCHEMA, "fn": fn, "M": int(M), "coeffs": [encode_coeff(c) for c in coeffs]}


def write_entry(directory, entry):
    """Atomic write: a temporary file in the same directory, then rename."""
    path = entry_path(directory, entry["fn"], entry["M"])
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(entry, fh)
    os.replace(tmp, path)
    return path


def read_entry(directory, fn, M):
    """The stored entry, None when absent; raises CacheCorrupt on a bad file."""
    path = entry_path(directory, fn, M)
    if not path.exists():
        return None
    try:
        entry = json.loads(path.read_text())
        if entry.get("schema") != SCHEMA or entry.get("fn") != fn or entry.get("M") != int(M):
            raise CacheCorrupt(f"{path}: key mismatch")
        coeffs = entry["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) != int(M) + 1:
            raise CacheCorrupt(f"{path}: expected {int(M) + 1} coefficients")
        [decode_coeff(c) for c in coeffs]
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise CacheCorrupt(f"{path}: {exc}") from None
    return entry


def cached_coefficients(fn, M, directory=None):
    """(coefficients 0..M, status) with status 'hit', 'miss' or 'recomputed'."""
    if fn not in COMPUTERS:
        raise ValueError(f"unknown expansion {fn!r}; known: {sorted(COMPUTERS)}")
    directory = cache_dir(directory)
    status = "miss"
    try:
        entry = read_entry(directory, fn, M)
        if entry is not None:
            return [decode_coeff(c) for c in entry["coeffs"]], "hit"
    except CacheCorrupt as exc:
        log.warning("corrupt cache entry, recomputing: %s", exc)
        status = "recomputed"
    coeffs = list(COMPUTERS[fn](M))[: M + 1]
    write_entry(directory, make_entry(fn, M, coeffs))
    return coeffs, status


def cache_roundtrip(entry, directory=None):
    """Write then read an entry back."""
    directory = cache_dir(directory)
    write_entry(directory, entry)
    return read_entry(directory, entry["fn"], entry["M"])
