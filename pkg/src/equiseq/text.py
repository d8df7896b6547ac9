"""Text representation and the index arithmetic shared by all searches.

Positions are 1-indexed everywhere in the public API: ``text.at(1)`` is the
first byte and an :class:`Occurrence` ``(i, d)`` names the positions
``i, i + d, i + 2d, ...``.
"""

from __future__ import annotations

from typing import NamedTuple, Union

import numpy as np

from .bitvec import PackedBits
from .errors import UnsupportedLength

CharLike = Union[int, str, bytes]


class Occurrence(NamedTuple):
    """Start position ``i`` and common distance ``d`` of an equidistant match."""

    i: int
    d: int


def as_byte(c: CharLike) -> int:
    """Normalize a character given as an int, 1-char str or 1-byte bytes."""
    if isinstance(c, (bytes, bytearray)):
        if len(c) != 1:
            raise ValueError(f"expected a single byte, got {c!r}")
        return c[0]
    if isinstance(c, str):
        if len(c) != 1:
            raise ValueError(f"expected a single character, got {c!r}")
        return ord(c.encode("latin-1"))
    if isinstance(c, (int, np.integer)) and 0 <= c <= 255:
        return int(c)
    raise ValueError(f"not a byte character: {c!r}")


def as_bytes(s: Union[str, bytes, bytearray, memoryview]) -> bytes:
    """Encode a pattern or text to bytes; ``str`` must be latin-1 encodable."""
    if isinstance(s, str):
        try:
            return s.encode("latin-1")
        except UnicodeEncodeError:
            raise ValueError(
                "text must be a byte string or a str of code points < 256"
            ) from None
    return bytes(s)


class Text:
    """Immutable byte string addressed by 1-indexed positions.

    Indicator bit vectors and position lists are built lazily, one per
    character actually queried, and cached.
    """

    __slots__ = ("_data", "_array", "_indicators", "_positions")

    def __init__(self, data: Union[str, bytes, bytearray, memoryview]):
        self._data = as_bytes(data)
        self._array = np.frombuffer(self._data, dtype=np.uint8)
        self._indicators: dict[int, PackedBits] = {}
        self._positions: dict[int, np.ndarray] = {}

    @property
    def data(self) -> bytes:
        return self._data

    @property
    def array(self) -> np.ndarray:
        """Read-only ``uint8`` view of the bytes (0-indexed)."""
        return self._array

    @property
    def n(self) -> int:
        return len(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __repr__(self) -> str:
        shown = self._data if len(self._data) <= 40 else self._data[:37] + b"..."
        return f"Text({shown!r}, n={self.n})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Text) and other._data == self._data

    def __hash__(self) -> int:
        return hash(self._data)

    def at(self, p: int) -> int:
        """Byte at 1-indexed position ``p``."""
        if not 1 <= p <= self.n:
            raise IndexError(f"position {p} outside 1..{self.n}")
        return self._data[p - 1]

    def alphabet(self) -> list[int]:
        """Distinct bytes occurring in the text, ascending."""
        return sorted(set(self._data))

    def indicator(self, c: CharLike) -> PackedBits:
        b = as_byte(c)
        bits = self._indicators.get(b)
        if bits is None:
            bits = PackedBits.from_bool_array(self._array == b)
            self._indicators[b] = bits
        return bits

    def positions(self, c: CharLike) -> np.ndarray:
        b = as_byte(c)
        pos = self._positions.get(b)
        if pos is None:
            pos = np.flatnonzero(self._array == b).astype(np.int64) + 1
            pos.flags.writeable = False
            self._positions[b] = pos
        return pos

    def skip_string(self, d: int, r: int) -> bytes:
        """The characters ``T[r], T[r+d], T[r+2d], ...`` for residue ``1 <= r <= d``."""
        if d < 1 or not 1 <= r <= d:
            raise ValueError(f"need d >= 1 and 1 <= r <= d, got d={d}, r={r}")
        return self._data[r - 1 :: d]


def as_text(text: Union[Text, str, bytes, bytearray, memoryview]) -> Text:
    return text if isinstance(text, Text) else Text(text)


def indicator(text, c: CharLike) -> PackedBits:
    """Bit vector with bit ``p`` set iff ``T[p] == c``."""
    return as_text(text).indicator(c)


def positions(text, c: CharLike) -> list[int]:
    """Ascending 1-indexed positions of ``c`` in the text."""
    return as_text(text).positions(c).tolist()


def d_max(n: int, k: int) -> int:
    """Largest distance at which a length-``k`` structure fits in ``n`` characters."""
    if k < 2:
        raise UnsupportedLength(f"structure length must be at least 2, got {k}")
    if n <= 1:
        return 0
    return (n - 1) // (k - 1)


def distance_bounds(n: int, k: int, d=None) -> tuple[int, int]:
    """Inclusive ``(lo, hi)`` distance range, optionally narrowed by ``d``.

    ``d`` may be a single distance or a ``range`` with step 1. The result is
    empty (``lo > hi``) when nothing fits.
    """
    top = d_max(n, k)
    if d is None:
        return 1, top
    if isinstance(d, range):
        if d.step != 1:
            raise ValueError("distance range must have step 1")
        return max(1, d.start), min(top, d.stop - 1)
    d = int(d)
    return max(1, d), min(top, d)
