"""Observables separating the quantum walk from its classical counterpart."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

import numpy as np

from .classical import classical_distribution, classical_site_trace
from .distribution import Distribution, TraceSeries
from .walk import position_distribution, run_walk


def offset_label(offset: float) -> str:
    return f"dt0={offset:g}"


def _quantum_run(n: int, offset: float, L: int | None):
    return run_walk(n, offset=offset, L=L)


def _sweep(n: int, offsets: Sequence[float], L: int | None, jobs: int):
    if jobs > 1 and len(offsets) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda o: _quantum_run(n, o, L), offsets))
    return [_quantum_run(n, o, L) for o in offsets]


def _check_offsets(offsets: Iterable[float]) -> list[float]:
    out = [float(o) for o in offsets]
    if not all(np.isfinite(out)):
        raise ValueError("offsets must be finite")
    return out


def error_sweep(
    n: int,
    offsets: Iterable[float],
    classical: bool = True,
    L: int | None = None,
    jobs: int = 1,
) -> list[Distribution]:
    """Distribution at step ``n`` for each pulse-time error, plus the classical one.

    Every distribution covers all integer sites in ``[-n, n]``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    offsets = _check_offsets(offsets)
    runs = _sweep(n, offsets, L, jobs)
    out = [
        position_distribution(states[-1], offset_label(o)).on_range(-n, n)
        for o, states in zip(offsets, runs)
    ]
    if classical:
        out.append(classical_distribution(n).to_distribution())
    return out


def site_trace(
    N: int,
    n_max: int,
    offsets: Iterable[float],
    classical: bool = True,
    L: int | None = None,
    jobs: int = 1,
) -> list[TraceSeries]:
    """Probability at site ``N`` after each step ``0..n_max``, one series per offset."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    offsets = _check_offsets(offsets)
    runs = _sweep(n_max, offsets, L, jobs)
    out = []
    for o, states in zip(offsets, runs):
        vals = [position_distribution(s).at(N) for s in states]
        out.append(TraceSeries(N, np.array(vals), offset_label(o)))
    if classical:
        out.append(classical_site_trace(N, n_max))
    return out


def _align(p: Distribution, q: Distribution):
    lo = min(p.sites[0], q.sites[0])
    hi = max(p.sites[-1], q.sites[-1])
    return p.on_range(lo, hi).probabilities, q.on_range(lo, hi).probabilities


def total_variation(p: Distribution, q: Distribution) -> float:
    """Half the L1 distance, after zero-padding both to a common site range."""
    a, b = _align(p, q)
    return 0.5 * float(np.sum(np.abs(a - b)))


def std_dev(p: Distribution) -> float:
    x = p.sites.astype(float)
    w = p.probabilities
    mean = float(np.sum(x * w))
    var = float(np.sum(x * x * w)) - mean * mean
    return float(np.sqrt(max(var, 0.0)))
