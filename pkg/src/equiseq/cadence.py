"""Counting and locating k-cadences.

A k-cadence is a k-sub-cadence ``(i, d)`` that also satisfies ``i <= d`` and
``i + k d > n``: extending the progression one step in either direction
would leave the text. Equivalently ``n - kd < i <= d``, which is only
possible when ``(k + 1) d > n``.

Strategies: ``filter`` runs the split scan and keeps the occurrences that
pass :func:`is_cadence`; ``windowed`` evaluates the bit-parallel AND only on
the window ``n - kd + 1 .. d`` for the few distances where it is nonempty;
``pairs`` enumerates position pairs and filters them.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from ._scan import _EMPTY as _E
from ._scan import char_plan, collect, describe, log2n, occurrences
from .bitvec import PackedBits, and_
from .config import DEFAULTS, Constants
from .text import CharLike, Occurrence, as_byte, as_text, d_max, distance_bounds

STRATEGIES = ("auto", "filter", "windowed", "pairs")


def is_cadence(occ: Occurrence, n: int, k: int) -> bool:
    i, d = occ
    return i <= d and i + k * d > n


def first_window_distance(n: int, k: int) -> int:
    """Smallest d whose cadence window can be nonempty, ``ceil(n / (k + 1))``."""
    return max(1, -(-n // (k + 1)))


def window(n: int, k: int, d: int) -> tuple[int, int]:
    """Positions ``lo..hi`` allowed as a cadence start at distance ``d``.

    ``lo`` is clamped to 1; the window is empty when ``lo > hi``.
    """
    return max(1, n - k * d + 1), d


def window_vector(text, c: CharLike, k: int, d: int) -> PackedBits:
    """AND of the k shifted windows of the indicator of ``c`` at distance ``d``.

    Bit ``t`` is set iff ``(lo + t - 1, d)`` is a k-cadence of ``c``. Slices
    that run past the end of the text are zero-extended.
    """
    t = as_text(text)
    n = t.n
    lo, hi = window(n, k, d)
    if lo > hi:
        return PackedBits(0)
    size = hi - lo + 1
    ind = t.indicator(c)
    acc = PackedBits.ones(size)
    for j in range(k):
        a, b = lo + j * d, min(hi + j * d, n)
        part = ind.extract(a, b) if a <= n else PackedBits(0)
        acc = and_(acc, part.resized(size))
    return acc


def _check(k: int) -> None:
    d_max(2, k)


def _chars(t, char) -> list[int]:
    return t.alphabet() if char is None else [as_byte(char)]


def _windowed_bounds(n: int, k: int, d) -> tuple[int, int]:
    lo, hi = distance_bounds(n, k, d)
    return max(lo, first_window_distance(n, k)), hi


def count_filter(text, k: int, *, d=None, char=None) -> int:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    only = -1 if char is None else as_byte(char)
    return int(_kernels.scan_split(t.array, k, only, lo, hi, True, False, _E, _E))


def locate_filter(text, k: int, *, d=None, char=None) -> list[Occurrence]:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    only = -1 if char is None else as_byte(char)
    return occurrences([collect(_kernels.scan_split, t.array, k, only, lo, hi, True)])


def _windowed_args(t, c, k):
    return t.indicator(c).words[np.newaxis, :], np.zeros(k, dtype=np.int64)


def count_windowed_char(text, k: int, c: CharLike, *, d=None) -> int:
    _check(k)
    t = as_text(text)
    lo, hi = _windowed_bounds(t.n, k, d)
    rows, sel = _windowed_args(t, as_byte(c), k)
    return int(_kernels.scan_progressions(rows, sel, t.n, lo, hi, True, False, _E, _E))


def count_windowed(text, k: int, *, d=None, char=None) -> int:
    _check(k)
    t = as_text(text)
    return sum(count_windowed_char(t, k, c, d=d) for c in _chars(t, char))


def _locate_windowed_char(t, k, c, lo, hi):
    rows, sel = _windowed_args(t, c, k)
    return collect(_kernels.scan_progressions, rows, sel, t.n, lo, hi, True)


def locate_windowed(text, k: int, *, d=None, char=None) -> list[Occurrence]:
    _check(k)
    t = as_text(text)
    lo, hi = _windowed_bounds(t.n, k, d)
    return occurrences([_locate_windowed_char(t, k, c, lo, hi) for c in _chars(t, char)])


def _count_pairs_char(t, k, c, lo, hi):
    pos = t.positions(c)
    return int(_kernels.scan_pairs(t.array, pos, k, lo, hi, True, False, _E, _E))


def _locate_pairs_char(t, k, c, lo, hi):
    return collect(_kernels.scan_pairs, t.array, t.positions(c), k, lo, hi, True)


def count_pairs(text, k: int, c: CharLike | None = None, *, d=None) -> int:
    """Pair enumeration filtered to cadences, for one character or all of them."""
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    return sum(_count_pairs_char(t, k, ch, lo, hi) for ch in _chars(t, c))


def locate_pairs(text, k: int, c: CharLike | None = None, *, d=None) -> list[Occurrence]:
    _check(k)
    t = as_text(text)
    lo, hi = distance_bounds(t.n, k, d)
    return occurrences([_locate_pairs_char(t, k, ch, lo, hi) for ch in _chars(t, c)])


def plan(text, k: int, constants: Constants = DEFAULTS) -> str | dict[int, str]:
    """``"filter"`` for long cadences, else per character ``"windowed"``/``"pairs"``."""
    _check(k)
    t = as_text(text)
    if k >= constants.filter_factor * math.sqrt(t.n * log2n(t.n)):
        return "filter"
    return {
        c: ("pairs" if how == "pairs" else "windowed")
        for c, how in char_plan(t, k, constants).items()
    }


def resolved_name(text, k: int, constants: Constants = DEFAULTS) -> str:
    p = plan(text, k, constants)
    return p if isinstance(p, str) else describe(p)


def _restrict(p: dict[int, str], char) -> dict[int, str]:
    if char is None:
        return p
    c = as_byte(char)
    return {c: p[c]} if c in p else {}


def count_cadences(
    text,
    k: int,
    strategy: str = "auto",
    *,
    d=None,
    char=None,
    constants: Constants = DEFAULTS,
) -> int:
    """Number of k-cadences (of ``char`` only, if given); same for every strategy."""
    t = as_text(text)
    if strategy == "auto":
        p = plan(t, k, constants)
        if p == "filter":
            return count_filter(t, k, d=d, char=char)
        return sum(
            count_pairs(t, k, c, d=d)
            if how == "pairs"
            else count_windowed_char(t, k, c, d=d)
            for c, how in _restrict(p, char).items()
        )
    if strategy == "filter":
        return count_filter(t, k, d=d, char=char)
    if strategy == "windowed":
        return count_windowed(t, k, d=d, char=char)
    if strategy == "pairs":
        return count_pairs(t, k, char, d=d)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def locate_cadences(
    text,
    k: int,
    strategy: str = "auto",
    *,
    d=None,
    char=None,
    constants: Constants = DEFAULTS,
) -> list[Occurrence]:
    """All k-cadences sorted by ``(d, i)``; same for every strategy."""
    t = as_text(text)
    if strategy == "auto":
        p = plan(t, k, constants)
        if p == "filter":
            return locate_filter(t, k, d=d, char=char)
        lo, hi = distance_bounds(t.n, k, d)
        wlo = max(lo, first_window_distance(t.n, k))
        return occurrences(
            [
                _locate_pairs_char(t, k, c, lo, hi)
                if how == "pairs"
                else _locate_windowed_char(t, k, c, wlo, hi)
                for c, how in _restrict(p, char).items()
            ]
        )
    if strategy == "filter":
        return locate_filter(t, k, d=d, char=char)
    if strategy == "windowed":
        return locate_windowed(t, k, d=d, char=char)
    if strategy == "pairs":
        return locate_pairs(t, k, char, d=d)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
