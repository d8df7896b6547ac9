"""Convolution-based counting for patterns of length three.

For an occurrence ``(i, d)`` of a length-3 pattern the middle position is
``z = i + d`` and the outer positions ``x = i``, ``y = i + 2d`` satisfy
``x + y = 2z``. Convolving the indicators of the two outer characters and
reading coefficient ``2z`` therefore counts the occurrences centred at ``z``.
Indicators are indexed ``0..n`` with slot 0 empty, so coefficient ``2z``
lines up with text position ``z``.

The five structural shapes:

* ``aaa``: full self-convolution; coefficient ``2z`` includes the pair
  ``(z, z)`` and every other pair twice, so ``g[z] = (c[2z] - 1) / 2``.
* ``aba``: full self-convolution of ``a`` at a ``b`` middle, ``g[z] = c[2z] / 2``.
* ``abc``, ``aac``, ``acc``: outer characters differ, so only ``x < y`` may
  be counted; a triangle convolution keeps the orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .convolution import acyclic_convolve, triangle_convolve
from .errors import ParityError, UnsupportedLength
from .text import as_bytes, as_text


@dataclass(frozen=True)
class CountProfile:
    """Occurrences per middle position: ``g[z - 1]`` counts those centred at ``z``."""

    g: np.ndarray
    total: int


def _pattern3(pattern) -> bytes:
    p = as_bytes(pattern)
    if len(p) != 3:
        raise UnsupportedLength(f"pattern must have length 3, got {len(p)}")
    return p


def shape(pattern) -> str:
    """Structural shape of a length-3 pattern: aaa, aba, abc, aac or acc."""
    a, b, c = _pattern3(pattern)
    if a == b == c:
        return "aaa"
    if a == c:
        return "aba"
    if a == b:
        return "aac"
    if b == c:
        return "acc"
    return "abc"


def _delta(t, c: int) -> np.ndarray:
    out = np.zeros(t.n + 1, dtype=np.int64)
    out[1:] = t.array == c
    return out


def _middles(conv: np.ndarray, n: int) -> np.ndarray:
    """Coefficients ``c[2z]`` for ``z = 1..n``."""
    return conv[2 : 2 * n + 1 : 2]


def _halve(values: np.ndarray, where: np.ndarray, *, minus_one: bool) -> np.ndarray:
    picked = values[where]
    if minus_one:
        if np.any(picked % 2 != 1):
            raise ParityError("self-convolution at a matching middle must be odd")
        picked = picked - 1
    elif np.any(picked % 2 != 0):
        raise ParityError("self-convolution at a non-matching middle must be even")
    out = np.zeros_like(values)
    out[where] = picked // 2
    return out


def _profile(g: np.ndarray) -> CountProfile:
    return CountProfile(g=g, total=int(g.sum()))


def count_esp3(text, pattern) -> CountProfile:
    """Count equidistant occurrences of a length-3 pattern, per middle position."""
    p = _pattern3(pattern)
    t = as_text(text)
    n = t.n
    if n < 3:
        return _profile(np.zeros(n, dtype=np.int64))
    first, middle, last = p
    mid = t.array == middle
    if first == last:
        da = _delta(t, first)
        cz = _middles(acyclic_convolve(da, da), n)
        return _profile(_halve(cz, mid, minus_one=(middle == first)))
    cz = _middles(triangle_convolve(_delta(t, first), _delta(t, last)), n)
    return _profile(np.where(mid, cz, 0))


def count_abelian3(text, pattern) -> CountProfile:
    """Count ``(i, d)`` whose three sampled characters are a permutation of ``pattern``."""
    p = _pattern3(pattern)
    t = as_text(text)
    n = t.n
    if n < 3:
        return _profile(np.zeros(n, dtype=np.int64))
    a, b, c = p
    if a == b == c:
        return count_esp3(t, p)
    at = {ch: t.array == ch for ch in set(p)}
    if len(set(p)) == 3:
        g = np.zeros(n, dtype=np.int64)
        # each full convolution covers both orders of its two outer characters
        for x, mid, y in ((a, b, c), (b, c, a), (c, a, b)):
            cz = _middles(acyclic_convolve(_delta(t, x), _delta(t, y)), n)
            g += np.where(at[mid], cz, 0)
        return _profile(g)
    twice = a if a in (b, c) else b
    once = next(ch for ch in p if ch != twice)
    d_twice, d_once = _delta(t, twice), _delta(t, once)
    # twice/once at the ends with twice in the middle: both orders counted
    mixed = _middles(acyclic_convolve(d_twice, d_once), n)
    g = np.where(at[twice], mixed, 0)
    # twice at both ends with once in the middle: pairs counted twice, no diagonal
    same = _middles(acyclic_convolve(d_twice, d_twice), n)
    g += _halve(same, at[once], minus_one=False)
    return _profile(g)
