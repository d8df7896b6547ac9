"""Counting and locating k-sub-cadences.

A k-sub-cadence is a pair ``(i, d)`` with ``T[i] = T[i+d] = ... = T[i+(k-1)d]``.
Three strategies are available:

``split``
    scan every d-skip string for runs of one character, ``O(n^2/k)``.
``bitpar``
    AND the indicator of each character with copies of itself shifted by
    ``d, 2d, ..., (k-1)d`` and popcount, ``O(n^2/log n)`` per character.
``pairs``
    enumerate pairs of equal characters as the first two terms and check the
    rest, ``O(k |N_c|^2)`` per character.

``auto`` picks split scanning for long progressions and otherwise decides per
character between pair enumeration and bit-parallel counting.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from ._scan import _EMPTY as _E
from ._scan import char_plan, collect, describe, log2n, occurrences
from .config import DEFAULTS, Constants
from .text import CharLike, Occurrence, as_byte, as_text, d_max, distance_bounds

STRATEGIES = ("auto", "split", "bitpar", "pairs")


def _check(k: int) -> None:
    d_max(2, k)  # raises UnsupportedLength for k < 2


def _chars(t, char) -> list[int]:
    return t.alphabet() if char is None else [as_byte(char)]


def _only(char) -> int:
    return -1 if char is None else as_byte(char)


def locate_split(text, k: int, *, d=None, char=None) -> list[Occurrence]:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    scan = _kernels.scan_split
    return occurrences([collect(scan, t.array, k, _only(char), lo, hi, False)])


def count_split(text, k: int, *, d=None, char=None) -> int:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    return int(_kernels.scan_split(t.array, k, _only(char), lo, hi, False, False, _E, _E))


def _bitpar_args(t, c: int, k: int):
    rows = t.indicator(c).words[np.newaxis, :]
    return rows, np.zeros(k, dtype=np.int64)


def count_bitpar_char(text, k: int, c: CharLike, *, d=None) -> int:
    """Bit-parallel count of the k-sub-cadences made of character ``c``."""
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    rows, sel = _bitpar_args(t, as_byte(c), k)
    return int(_kernels.scan_progressions(rows, sel, t.n, lo, hi, False, False, _E, _E))


def count_bitpar(text, k: int, *, d=None, char=None) -> int:
    _check(k)
    t = as_text(text)
    return sum(count_bitpar_char(t, k, c, d=d) for c in _chars(t, char))


def _locate_bitpar_char(t, k, c, lo, hi):
    rows, sel = _bitpar_args(t, c, k)
    return collect(_kernels.scan_progressions, rows, sel, t.n, lo, hi, False)


def locate_bitpar(text, k: int, *, d=None, char=None) -> list[Occurrence]:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    return occurrences([_locate_bitpar_char(t, k, c, lo, hi) for c in _chars(t, char)])


def count_pairs(text, k: int, c: CharLike, *, d=None) -> int:
    """Count k-sub-cadences of character ``c`` by enumerating position pairs."""
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    pos = t.positions(as_byte(c))
    return int(_kernels.scan_pairs(t.array, pos, k, lo, hi, False, False, _E, _E))


def _locate_pairs_char(t, k, c, lo, hi):
    return collect(_kernels.scan_pairs, t.array, t.positions(c), k, lo, hi, False)


def locate_pairs(text, k: int, c: CharLike | None = None, *, d=None) -> list[Occurrence]:
    """Pair-enumeration locate, for one character or (``c=None``) all of them."""
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    return occurrences([_locate_pairs_char(t, k, ch, lo, hi) for ch in _chars(t, c)])


def plan(text, k: int, constants: Constants = DEFAULTS) -> str | dict[int, str]:
    """Strategy chosen by ``auto``: ``"split"`` or a per-character mapping."""
    _check(k)
    t = as_text(text)
    if k >= constants.split_factor * log2n(t.n):
        return "split"
    return char_plan(t, k, constants)


def resolved_name(text, k: int, constants: Constants = DEFAULTS) -> str:
    p = plan(text, k, constants)
    return p if isinstance(p, str) else describe(p)


def _restrict(p: dict[int, str], char) -> dict[int, str]:
    if char is None:
        return p
    c = as_byte(char)
    return {c: p[c]} if c in p else {}


def count_subcadences(
    text,
    k: int,
    strategy: str = "auto",
    *,
    d=None,
    char=None,
    constants: Constants = DEFAULTS,
) -> int:
    """Number of k-sub-cadences (of ``char`` only, if given); same for every strategy."""
    t = as_text(text)
    if strategy == "auto":
        p = plan(t, k, constants)
        if p == "split":
            return count_split(t, k, d=d, char=char)
        return sum(
            count_pairs(t, k, c, d=d) if how == "pairs" else count_bitpar_char(t, k, c, d=d)
            for c, how in _restrict(p, char).items()
        )
    if strategy == "split":
        return count_split(t, k, d=d, char=char)
    if strategy == "bitpar":
        return count_bitpar(t, k, d=d, char=char)
    if strategy == "pairs":
        _check(k)
        return sum(count_pairs(t, k, c, d=d) for c in _chars(t, char))
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def locate_subcadences(
    text,
    k: int,
    strategy: str = "auto",
    *,
    d=None,
    char=None,
    constants: Constants = DEFAULTS,
) -> list[Occurrence]:
    """All k-sub-cadences sorted by ``(d, i)``; same for every strategy."""
    t = as_text(text)
    if strategy == "auto":
        p = plan(t, k, constants)
        if p == "split":
            return locate_split(t, k, d=d, char=char)
        lo, hi = distance_bounds(t.n, k, d)
        return occurrences(
            [
                _locate_pairs_char(t, k, c, lo, hi)
                if how == "pairs"
                else _locate_bitpar_char(t, k, c, lo, hi)
                for c, how in _restrict(p, char).items()
            ]
        )
    if strategy == "split":
        return locate_split(t, k, d=d, char=char)
    if strategy == "bitpar":
        return locate_bitpar(t, k, d=d, char=char)
    if strategy == "pairs":
        return locate_pairs(t, k, char, d=d)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
