"""Site-indexed probability containers shared by the walk and the analysis."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Distribution:
    sites: np.ndarray
    probabilities: np.ndarray
    step: int
    label: str = ""

    def __post_init__(self):
        sites = np.asarray(self.sites, dtype=np.int64)
        probs = np.asarray(self.probabilities, dtype=float)
        if sites.shape != probs.shape or sites.ndim != 1:
            raise ValueError("sites and probabilities must be 1-D and equally long")
        if sites.size > 1 and np.any(np.diff(sites) != 1):
            raise ValueError("sites must be consecutive integers")
        object.__setattr__(self, "sites", sites)
        object.__setattr__(self, "probabilities", probs)

    def __len__(self) -> int:
        return self.sites.size

    def at(self, x: int) -> float:
        if self.sites.size == 0 or not self.sites[0] <= x <= self.sites[-1]:
            return 0.0
        return float(self.probabilities[x - self.sites[0]])

    def total(self) -> float:
        return float(self.probabilities.sum())

    def on_range(self, lo: int, hi: int) -> "Distribution":
        """Restrict or zero-pad to sites ``lo..hi`` inclusive."""
        sites = np.arange(lo, hi + 1)
        probs = np.array([self.at(int(x)) for x in sites], dtype=float)
        return Distribution(sites, probs, self.step, self.label)

    def relabel(self, label: str) -> "Distribution":
        return Distribution(self.sites, self.probabilities, self.step, label)


@dataclass(frozen=True)
class TraceSeries:
    """Probability at one site as a function of step count."""

    site: int
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float))

    @property
    def steps(self) -> np.ndarray:
        return np.arange(self.values.size)
