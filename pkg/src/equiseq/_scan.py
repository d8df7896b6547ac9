"""Glue between the compiled scanners and the public result types."""

from __future__ import annotations

import math

import numpy as np

from .config import Constants
from .text import Occurrence, Text

_EMPTY = np.empty(0, dtype=np.int64)


def collect(scan, *args) -> tuple[np.ndarray, np.ndarray]:
    """Run a counting/locating kernel twice: once to size, once to fill."""
    total = scan(*args, False, _EMPTY, _EMPTY)
    out_i = np.empty(total, dtype=np.int64)
    out_d = np.empty(total, dtype=np.int64)
    scan(*args, True, out_i, out_d)
    return out_i, out_d


def occurrences(parts: list[tuple[np.ndarray, np.ndarray]]) -> list[Occurrence]:
    """Merge ``(i, d)`` arrays into a list sorted by ``(d, i)``."""
    if not parts:
        return []
    i = np.concatenate([p[0] for p in parts])
    d = np.concatenate([p[1] for p in parts])
    order = np.lexsort((i, d))
    return [Occurrence(a, b) for a, b in zip(i[order].tolist(), d[order].tolist())]


def log2n(n: int) -> float:
    return math.log2(max(n, 2))


def char_plan(text: Text, k: int, constants: Constants) -> dict[int, str]:
    """Per character: ``"pairs"`` when k|N_c|^2 is below n^2/log n, else ``"bitpar"``."""
    n = text.n
    budget = constants.pairs_factor * n * n / log2n(n)
    plan = {}
    for c in text.alphabet():
        occ = len(text.positions(c))
        plan[c] = "pairs" if k * occ * occ < budget else "bitpar"
    return plan


def describe(plan: dict[int, str]) -> str:
    used = sorted(set(plan.values()))
    return "+".join(used) if used else "bitpar"
