"""Exact integer convolution and its triangle-restricted variant.

Both operate on non-negative integer sequences indexed from 0 and return
``c`` of length ``2L - 1`` where ``L`` is the longer operand (the shorter one
is zero-extended):

* :func:`acyclic_convolve`: ``c[z] = sum_{x + y = z} a[x] b[y]``
* :func:`triangle_convolve`: the same sum restricted to ``x < y``

Products are computed with a number-theoretic transform modulo the prime
``998244353 = 119 * 2**23 + 1``. The result is exact as long as every true
coefficient is below the modulus; :class:`CapacityExceeded` is raised when
that cannot be guaranteed from the operands' maxima.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import CapacityExceeded

MOD = 998244353
ROOT = 3
MAX_TRANSFORM = 1 << 23
BASE_SIZE = 32
_DIRECT_LIMIT = 64


def _as_seq(a) -> np.ndarray:
    arr = np.asarray(a)
    if arr.ndim != 1:
        raise ValueError("operands must be one-dimensional")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValueError("operands must be integers")
    arr = arr.astype(np.int64)
    if arr.size and arr.min() < 0:
        raise ValueError("operands must be non-negative")
    return arr


def _prepare(a, b) -> tuple[np.ndarray, np.ndarray]:
    a, b = _as_seq(a), _as_seq(b)
    size = max(a.size, b.size)
    a = np.pad(a, (0, size - a.size))
    b = np.pad(b, (0, size - b.size))
    if size:
        bound = int(a.max()) * int(b.max()) * size
        if bound >= MOD:
            raise CapacityExceeded(
                f"coefficients may reach {bound}, transform modulus is {MOD}"
            )
    return a, b


@lru_cache(maxsize=32)
def _bit_reverse(size: int) -> np.ndarray:
    bits = size.bit_length() - 1
    idx = np.arange(size, dtype=np.int64)
    rev = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


@lru_cache(maxsize=64)
def _twiddles(size: int, invert: bool) -> np.ndarray:
    """Powers ``w**j`` for ``j < size // 2`` of a primitive ``size``-th root ``w``."""
    w = pow(ROOT, (MOD - 1) // size, MOD)
    if invert:
        w = pow(w, MOD - 2, MOD)
    count = max(size // 2, 1)
    out = np.ones(count, dtype=np.uint64)
    filled = 1
    while filled < count:
        step = np.uint64(pow(w, filled, MOD))
        take = min(filled, count - filled)
        out[filled : filled + take] = out[:take] * step % np.uint64(MOD)
        filled += take
    return out


def _ntt(a: np.ndarray, invert: bool) -> np.ndarray:
    size = a.size
    mod = np.uint64(MOD)
    a = a[_bit_reverse(size)]
    table = _twiddles(size, invert)
    length = 2
    while length <= size:
        half = length // 2
        tw = table[:: size // length][:half]
        blocks = a.reshape(-1, length)
        u = blocks[:, :half].copy()
        v = blocks[:, half:] * tw % mod
        blocks[:, :half] = (u + v) % mod
        blocks[:, half:] = (u + mod - v) % mod
        length *= 2
    if invert:
        a = a * np.uint64(pow(size, MOD - 2, MOD)) % mod
    return a


def _ntt_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out_len = a.size + b.size - 1
    size = 1 << max(out_len - 1, 0).bit_length()
    if size > MAX_TRANSFORM:
        raise CapacityExceeded(f"transform length {size} exceeds {MAX_TRANSFORM}")
    fa = np.zeros(size, dtype=np.uint64)
    fb = np.zeros(size, dtype=np.uint64)
    fa[: a.size] = a
    fb[: b.size] = b
    prod = _ntt(fa, False) * _ntt(fb, False) % np.uint64(MOD)
    return _ntt(prod, True)[:out_len].astype(np.int64)


def _convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Full linear convolution of validated operands of any lengths."""
    if a.size == 0 or b.size == 0:
        return np.zeros(max(a.size + b.size - 1, 0), dtype=np.int64)
    if min(a.size, b.size) <= _DIRECT_LIMIT:
        return np.convolve(a, b)
    return _ntt_convolve(a, b)


def acyclic_convolve(a, b) -> np.ndarray:
    """``c[z] = sum_{x+y=z} a[x] b[y]`` for ``z = 0 .. 2L-2``, exactly."""
    a, b = _prepare(a, b)
    return _convolve(a, b)


def triangle_convolve(a, b, *, base_size: int = BASE_SIZE) -> np.ndarray:
    """``c[z] = sum_{x+y=z, x<y} a[x] b[y]``, exactly.

    The index range is halved recursively: pairs with both indices in one
    half recurse, pairs with ``x`` in the lower and ``y`` in the upper half
    form a full rectangle handled by one ordinary convolution. Ranges of at
    most ``base_size`` indices use the direct double loop.
    """
    if base_size < 1:
        raise ValueError("base_size must be positive")
    a, b = _prepare(a, b)
    size = a.size
    out = np.zeros(max(2 * size - 1, 0), dtype=np.int64)

    def solve(lo: int, hi: int) -> None:
        if hi - lo + 1 <= base_size:
            for x in range(lo, hi):
                if a[x]:
                    out[2 * x + 1 : x + hi + 1] += a[x] * b[x + 1 : hi + 1]
            return
        mid = (lo + hi) // 2
        solve(lo, mid)
        solve(mid + 1, hi)
        rect = _convolve(a[lo : mid + 1], b[mid + 1 : hi + 1])
        start = lo + mid + 1
        out[start : start + rect.size] += rect

    if size:
        solve(0, size - 1)
    return out
