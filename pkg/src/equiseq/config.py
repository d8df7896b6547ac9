"""Crossover constants for the automatic strategy selection.

Only asymptotic crossovers are known, so every constant is a plain multiplier
that callers may tune::

    from equiseq import Constants, count_subcadences
    count_subcadences(text, 4, constants=Constants(split_factor=2.0))
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Constants:
    #: subcadences: use split scanning when k >= split_factor * log2(n)
    split_factor: float = 1.0
    #: per character: use pair enumeration when k*|N_c|^2 < pairs_factor * n^2/log2(n)
    pairs_factor: float = 1.0
    #: cadences: use filtering when k >= filter_factor * sqrt(n*log2(n))
    filter_factor: float = 1.0
    #: patterns: use bit-parallel matching when m < bitpar_factor * log2(n)
    bitpar_factor: float = 1.0


DEFAULTS = Constants()
