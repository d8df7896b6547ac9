"""Counting and locating equidistant subsequence structures in strings.

Sub-cadences, cadences, equidistant pattern occurrences and (for length-3
patterns) Abelian equidistant occurrences, each with several algorithms that
return identical results and an ``auto`` mode that picks the cheapest one.
"""

from .bitvec import PackedBits
from .cadence import count_cadences, is_cadence, locate_cadences
from .config import DEFAULTS, Constants
from .convolution import acyclic_convolve, triangle_convolve
from .errors import (
    CapacityExceeded,
    EquiseqError,
    LengthMismatch,
    ParityError,
    RangeError,
    UnsupportedLength,
)
from .espm import count_espm, kmp_search, locate_espm
from .length3 import CountProfile, count_abelian3, count_esp3
from .subcadence import count_subcadences, locate_subcadences
from .text import Occurrence, Text, d_max, indicator, positions

__all__ = [
    "CapacityExceeded",
    "Constants",
    "CountProfile",
    "DEFAULTS",
    "EquiseqError",
    "LengthMismatch",
    "Occurrence",
    "PackedBits",
    "ParityError",
    "RangeError",
    "Text",
    "UnsupportedLength",
    "acyclic_convolve",
    "count_abelian3",
    "count_cadences",
    "count_esp3",
    "count_espm",
    "count_subcadences",
    "d_max",
    "indicator",
    "is_cadence",
    "kmp_search",
    "locate_cadences",
    "locate_espm",
    "locate_subcadences",
    "positions",
    "triangle_convolve",
]
