"""Equidistant subsequence pattern matching.

``(i, d)`` is an occurrence of ``P`` (length ``m >= 2``) when reading the
text at ``i, i + d, ..., i + (m-1)d`` spells ``P``.

``split`` runs KMP over every d-skip string, ``O(n^2/m)``. ``bitpar`` ANDs
the indicator of ``P[j]`` shifted by ``(j-1)d`` for ``j = 1..m``,
``O(n^2/log n)``; indicators are built once per distinct pattern character.
``auto`` prefers ``bitpar`` for patterns shorter than ``log2(n)``.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from ._scan import _EMPTY as _E
from ._scan import collect, log2n, occurrences
from .bitvec import PackedBits, and_shifted
from .config import DEFAULTS, Constants
from .errors import UnsupportedLength
from .text import Occurrence, as_bytes, as_text, distance_bounds

STRATEGIES = ("auto", "split", "bitpar")


def as_pattern(pattern) -> bytes:
    p = as_bytes(pattern)
    if len(p) < 2:
        raise UnsupportedLength(f"pattern length must be at least 2, got {len(p)}")
    return p


def _u8(b: bytes) -> np.ndarray:
    return np.frombuffer(b, dtype=np.uint8)


def kmp_search(haystack, needle) -> list[int]:
    """1-indexed start positions of every (possibly overlapping) occurrence."""
    hay, pat = _u8(as_bytes(haystack)), _u8(as_bytes(needle))
    if len(pat) == 0:
        raise ValueError("needle must be nonempty")
    fail = _kernels.kmp_failure(pat)
    total = _kernels.kmp_search(hay, pat, fail, False, _E)
    out = np.empty(total, dtype=np.int64)
    _kernels.kmp_search(hay, pat, fail, True, out)
    return out.tolist()


def _split_args(t, p: bytes, d):
    pat = _u8(p)
    lo, hi = distance_bounds(t.n, len(p), d)
    return t.array, pat, _kernels.kmp_failure(pat), lo, hi


def count_split_kmp(text, pattern, *, d=None) -> int:
    p = as_pattern(pattern)
    t = as_text(text)
    return int(_kernels.scan_split_kmp(*_split_args(t, p, d), False, _E, _E))


def locate_split_kmp(text, pattern, *, d=None) -> list[Occurrence]:
    p = as_pattern(pattern)
    t = as_text(text)
    return occurrences([collect(_kernels.scan_split_kmp, *_split_args(t, p, d))])


def _rows(t, p: bytes):
    """Indicator rows for the distinct pattern characters, or None if one is absent."""
    chars = sorted(set(p))
    present = set(t.data)
    if any(c not in present for c in chars):
        return None
    rows = np.stack([t.indicator(c).words for c in chars])
    sel = np.asarray([chars.index(c) for c in p], dtype=np.int64)
    return rows, sel


def count_bitpar(text, pattern, *, d=None) -> int:
    p = as_pattern(pattern)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, len(p), d)
    prepared = _rows(t, p)
    if prepared is None:
        return 0
    rows, sel = prepared
    return int(_kernels.scan_progressions(rows, sel, t.n, lo, hi, False, False, _E, _E))


def locate_bitpar(text, pattern, *, d=None) -> list[Occurrence]:
    p = as_pattern(pattern)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, len(p), d)
    prepared = _rows(t, p)
    if prepared is None:
        return []
    rows, sel = prepared
    return occurrences(
        [collect(_kernels.scan_progressions, rows, sel, t.n, lo, hi, False)]
    )


def match_vector(text, pattern, d: int) -> PackedBits:
    """Bit ``i`` set iff ``(i, d)`` is an occurrence; length ``n - (m-1)d``."""
    p = as_pattern(pattern)
    t = as_text(text)
    length = t.n - (len(p) - 1) * d
    if d < 1 or length <= 0:
        return PackedBits(0)
    vectors = [t.indicator(c) for c in p]
    return and_shifted(vectors, [j * d for j in range(len(p))], length)


def plan(text, pattern, constants: Constants = DEFAULTS) -> str:
    p = as_pattern(pattern)
    t = as_text(text)
    return "bitpar" if len(p) < constants.bitpar_factor * log2n(t.n) else "split"


def count_espm(
    text, pattern, strategy: str = "auto", *, d=None, constants: Constants = DEFAULTS
) -> int:
    """Number of equidistant occurrences of ``pattern``; same for every strategy."""
    if strategy == "auto":
        strategy = plan(text, pattern, constants)
    if strategy == "split":
        return count_split_kmp(text, pattern, d=d)
    if strategy == "bitpar":
        return count_bitpar(text, pattern, d=d)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def locate_espm(
    text, pattern, strategy: str = "auto", *, d=None, constants: Constants = DEFAULTS
) -> list[Occurrence]:
    """Occurrences sorted by ``(d, i)``; same for every strategy."""
    if strategy == "auto":
        strategy = plan(text, pattern, constants)
    if strategy == "split":
        return locate_split_kmp(text, pattern, d=d)
    if strategy == "bitpar":
        return locate_bitpar(text, pattern, d=d)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
