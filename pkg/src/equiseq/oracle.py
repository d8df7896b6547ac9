"""Brute-force reference implementations.

Each function transcribes a definition directly and shares no code with the
fast paths beyond :class:`~equiseq.text.Text`. They are quadratic or worse
and meant for tests, ``--algo brute`` and ``--check`` on small inputs.
"""

from __future__ import annotations

from collections import Counter

from .errors import UnsupportedLength
from .text import Occurrence, as_bytes, as_text


def _dmax(n: int, k: int) -> int:
    if k < 2:
        raise UnsupportedLength(f"structure length must be at least 2, got {k}")
    return (n - 1) // (k - 1) if n > 1 else 0


def _spelled(s: bytes, i: int, d: int, m: int):
    """Characters at 1-indexed positions i, i+d, ..., or None if they leave the text."""
    if i + (m - 1) * d > len(s):
        return None
    return s[i - 1 : i - 1 + (m - 1) * d + 1 : d]


def brute_subcadences(text, k: int) -> list[Occurrence]:
    s = as_text(text).data
    n = len(s)
    out = []
    for d in range(1, _dmax(n, k) + 1):
        for i in range(1, n + 1):
            got = _spelled(s, i, d, k)
            if got is not None and got.count(got[0]) == k:
                out.append(Occurrence(i, d))
    return out


def brute_cadences(text, k: int) -> list[Occurrence]:
    n = as_text(text).n
    return [o for o in brute_subcadences(text, k) if o.i - o.d <= 0 and n < o.i + k * o.d]


def brute_esp(text, pattern) -> list[Occurrence]:
    s = as_text(text).data
    p = as_bytes(pattern)
    m = len(p)
    n = len(s)
    out = []
    for d in range(1, _dmax(n, m) + 1):
        for i in range(1, n + 1):
            if _spelled(s, i, d, m) == p:
                out.append(Occurrence(i, d))
    return out


def brute_abelian3(text, pattern) -> list[Occurrence]:
    s = as_text(text).data
    p = as_bytes(pattern)
    if len(p) != 3:
        raise UnsupportedLength(f"pattern must have length 3, got {len(p)}")
    want = Counter(p)
    n = len(s)
    out = []
    for d in range(1, _dmax(n, 3) + 1):
        for i in range(1, n + 1):
            got = _spelled(s, i, d, 3)
            if got is not None and Counter(got) == want:
                out.append(Occurrence(i, d))
    return out


def brute_convolve(a, b, region: str = "full") -> list[int]:
    """Schoolbook convolution over the full square or the ``x < y`` triangle."""
    if region not in ("full", "x_less_than_y"):
        raise ValueError(f"unknown region {region!r}")
    a, b = [int(v) for v in a], [int(v) for v in b]
    size = max(len(a), len(b))
    a += [0] * (size - len(a))
    b += [0] * (size - len(b))
    out = [0] * max(2 * size - 1, 0)
    for x in range(size):
        for y in range(size):
            if region == "full" or x < y:
                out[x + y] += a[x] * b[y]
    return out


def masked_cadence_count(text, k: int) -> int:
    """Cadence count via full-length ``Q_d AND R_d`` on Python integers.

    This is the unwindowed bit-parallel form: ``Q_d`` is computed over the
    whole text for every distance and only then masked to ``n - kd < i <= d``.
    Bit ``i - 1`` of an integer stands for position ``i``.
    """
    t = as_text(text)
    n = t.n
    total = 0
    for c in sorted(set(t.data)):
        delta = sum(1 << (p - 1) for p in range(1, n + 1) if t.data[p - 1] == c)
        for d in range(1, _dmax(n, k) + 1):
            q = delta
            for j in range(1, k):
                q &= delta >> (j * d)
            lo, hi = max(1, n - k * d + 1), d
            if lo > hi:
                continue
            mask = ((1 << (hi - lo + 1)) - 1) << (lo - 1)
            total += bin(q & mask).count("1")
    return total
