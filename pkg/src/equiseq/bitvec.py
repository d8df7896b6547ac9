"""Word-packed bit vectors with 1-indexed positions.

Position ``p`` is bit ``(p - 1) % 64`` of word ``(p - 1) // 64``, so the
lowest position sits in the least significant bit of the first word and
"shift toward low index" is a right shift across words. Vectors are
immutable and always tail-clean: every bit past ``len`` is zero.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels
from .errors import LengthMismatch, RangeError


def _nwords(length: int) -> int:
    # one slack word past the last semantic bit, see _kernels
    return length // 64 + 1


class PackedBits:
    """Fixed-length bit vector stored in ``uint64`` words."""

    __slots__ = ("_len", "_words")

    def __init__(self, length: int, words: np.ndarray | None = None):
        if length < 0:
            raise ValueError("length must be non-negative")
        if words is None:
            words = np.zeros(_nwords(length), dtype=np.uint64)
        elif words.dtype != np.uint64 or words.shape != (_nwords(length),):
            raise ValueError("words must be a uint64 array of length len // 64 + 1")
        words.flags.writeable = False
        self._len = length
        self._words = words

    @classmethod
    def zeros(cls, length: int) -> PackedBits:
        return cls(length)

    @classmethod
    def ones(cls, length: int) -> PackedBits:
        return cls.from_bool_array(np.ones(length, dtype=bool))

    @classmethod
    def from_bool_array(cls, bits) -> PackedBits:
        """Build from a 0-indexed array-like; element ``t`` becomes position ``t + 1``."""
        bits = np.asarray(bits, dtype=bool)
        length = bits.shape[0]
        raw = np.packbits(bits, bitorder="little").tobytes()
        raw += bytes(8 * _nwords(length) - len(raw))
        return cls(length, np.frombuffer(raw, dtype="<u8").astype(np.uint64))

    @classmethod
    def from_positions(cls, length: int, positions: Iterable[int]) -> PackedBits:
        bits = np.zeros(length, dtype=bool)
        for p in positions:
            if not 1 <= p <= length:
                raise RangeError(f"position {p} outside 1..{length}")
            bits[p - 1] = True
        return cls.from_bool_array(bits)

    @classmethod
    def from_string(cls, s: str) -> PackedBits:
        """``"1011"`` has positions 1, 3 and 4 set (leftmost character is position 1)."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls.from_bool_array([ch == "1" for ch in s])

    @property
    def words(self) -> np.ndarray:
        """Read-only backing words, including the zero slack word."""
        return self._words

    def __len__(self) -> int:
        return self._len

    def __getitem__(self, p: int) -> int:
        if not 1 <= p <= self._len:
            raise RangeError(f"position {p} outside 1..{self._len}")
        q, r = divmod(p - 1, 64)
        return int(self._words[q] >> np.uint64(r)) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PackedBits):
            return NotImplemented
        return self._len == other._len and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self._len, self._words.tobytes()))

    def __repr__(self) -> str:
        body = self.to_string() if self._len <= 64 else f"{self._len} bits"
        return f"PackedBits({body!r})"

    def to_bool_array(self) -> np.ndarray:
        raw = np.frombuffer(self._words.astype("<u8").tobytes(), dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self._len].astype(bool)

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_bool_array())

    def __and__(self, other: PackedBits) -> PackedBits:
        return and_(self, other)

    def shift_low(self, s: int) -> PackedBits:
        return shift_low(self, s)

    def popcount(self) -> int:
        return popcount(self)

    def iter_set_bits(self) -> Iterator[int]:
        return iter_set_bits(self)

    def extract(self, lo: int, hi: int) -> PackedBits:
        return extract(self, lo, hi)

    def resized(self, length: int) -> PackedBits:
        """Truncate, or zero-extend, to ``length`` bits."""
        if length <= self._len:
            return extract(self, 1, length) if length else PackedBits(0)
        words = np.zeros(_nwords(length), dtype=np.uint64)
        words[: self._words.shape[0]] = self._words
        return PackedBits(length, words)


def and_(a: PackedBits, b: PackedBits) -> PackedBits:
    if len(a) != len(b):
        raise LengthMismatch(f"cannot AND vectors of length {len(a)} and {len(b)}")
    return PackedBits(len(a), a.words & b.words)


def shift_low(v: PackedBits, s: int) -> PackedBits:
    """``result[i] = v[i + s]`` where ``i + s <= len``, zero elsewhere."""
    if s < 0:
        raise ValueError("shift must be non-negative")
    n = len(v)
    out = np.zeros(_nwords(n), dtype=np.uint64)
    if s < n:
        _kernels.shift_low(v.words, s, n, out)
    return PackedBits(n, out)


def popcount(v: PackedBits) -> int:
    return int(_kernels.popcount(v.words))


def iter_set_bits(v: PackedBits) -> Iterator[int]:
    """Ascending set positions, peeling the least significant bit of each nonzero word."""
    words = v.words
    for q in np.flatnonzero(words).tolist():
        w = int(words[q])
        base = 64 * q
        while w:
            low = w & -w
            yield base + low.bit_length()
            w ^= low


def extract(v: PackedBits, lo: int, hi: int) -> PackedBits:
    """Fresh vector holding positions ``lo..hi`` of ``v``; empty when ``lo > hi``."""
    if lo < 1 or hi > len(v):
        raise RangeError(f"window {lo}..{hi} outside 1..{len(v)}")
    if lo > hi:
        return PackedBits(0)
    return and_shifted([v], [lo - 1], hi - lo + 1)


def and_shifted(
    vectors: Sequence[PackedBits], offsets: Sequence[int], length: int
) -> PackedBits:
    """AND of windows: ``result[t] = AND_j vectors[j][offsets[j] + t]`` for ``t = 1..length``.

    With offsets ``0, d, 2d, ...`` and ``length = n - (k-1)d`` this is the
    running AND of ``shift_low(v_j, j*d)`` restricted to the positions where a
    length-``k`` progression can start, computed in one pass without
    materializing the shifted vectors.
    """
    if len(vectors) != len(offsets) or not vectors:
        raise ValueError("need one offset per vector and at least one vector")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise LengthMismatch("all vectors must have the same length")
    if length < 0:
        raise ValueError("length must be non-negative")
    if any(off < 0 or off + length > n for off in offsets):
        raise RangeError(f"window of {length} bits at {list(offsets)} leaves 1..{n}")
    rows, sel = _stack(vectors)
    out = np.zeros(_nwords(length), dtype=np.uint64)
    _kernels.and_shifted(rows, sel, np.asarray(offsets, dtype=np.int64), length, out)
    return PackedBits(length, out)


def _stack(vectors: Sequence[PackedBits]) -> tuple[np.ndarray, np.ndarray]:
    """Distinct word arrays as rows of a 2-D array, plus the row of each vector."""
    index: dict[int, int] = {}
    rows = []
    sel = []
    for v in vectors:
        key = id(v)
        if key not in index:
            index[key] = len(rows)
            rows.append(v.words)
        sel.append(index[key])
    return np.stack(rows), np.asarray(sel, dtype=np.int64)
