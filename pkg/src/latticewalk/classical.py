"""Unbiased classical +/-1 random walk from the origin, computed exactly.

Path counts are propagated with Python integers over a pyramid of width
``n + 1`` so no factorials are formed and nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .distribution import Distribution, TraceSeries


@lru_cache(maxsize=256)
def _path_counts(n: int) -> tuple[int, ...]:
    # counts[k] = number of paths with k right-moves, i.e. ending at 2k - n
    row = [1]
    for _ in range(n):
        nxt = [0] * (len(row) + 1)
        for k, c in enumerate(row):
            nxt[k] += c
            nxt[k + 1] += c
        row = nxt
    return tuple(row)


@dataclass(frozen=True)
class ClassicalDistribution:
    n: int
    exact: tuple[Fraction, ...]

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.n, self.n + 1)

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([float(p) for p in self.exact])

    def at(self, x: int) -> Fraction:
        if abs(x) > self.n:
            return Fraction(0)
        return self.exact[x + self.n]

    def to_distribution(self, label: str = "classical") -> Distribution:
        return Distribution(self.sites, self.probabilities, self.n, label)


def classical_distribution(n: int) -> ClassicalDistribution:
    """Exact distribution over sites ``[-n, n]`` after ``n`` fair steps."""
    if int(n) != n or n < 0:
        raise ValueError(f"step count must be a non-negative integer, got {n!r}")
    n = int(n)
    counts = _path_counts(n)
    denom = 1 << n
    probs = [Fraction(0)] * (2 * n + 1)
    for k, c in enumerate(counts):
        probs[2 * k] = Fraction(c, denom)
    return ClassicalDistribution(n, tuple(probs))


def classical_site_trace(N: int, n_max: int) -> TraceSeries:
    """``P_n(N)`` for ``n = 0..n_max``; zero where ``N`` is unreachable."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    vals = [float(classical_distribution(n).at(N)) for n in range(n_max + 1)]
    return TraceSeries(N, np.array(vals), "classical")
