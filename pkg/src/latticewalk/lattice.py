"""Superlattice physics: tunneling couplings, pulse timing, potentials.

Units: hbar = 1, energies in recoil energies E_R, times in hbar/E_R,
positions in lattice periods. Physical units enter only through
``adiabatic_time`` and ``measurement_offset``, which are unit-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.optimize import bisect

Config = Literal["odd", "even"]

# lower edge of the monotone region of J(V): below ~0.4 E_R J grows with V
MONOTONE_FLOOR = 1.0
SOLVE_XTOL = 1e-10


class NoSolutionError(ValueError):
    """Requested coupling ratio is outside the achievable range."""


@dataclass(frozen=True)
class LatticeParams:
    V: float
    V_prime: float = 0.0
    wavelength: float | None = None
    E_R: float = 1.0

    def __post_init__(self):
        if not self.V > 0:
            raise ValueError(f"primary amplitude V must be positive, got {self.V!r}")
        if not 0 <= self.V_prime < self.V:
            raise ValueError(
                f"secondary amplitude must satisfy 0 <= V' < V, got V'={self.V_prime!r}, V={self.V!r}"
            )
        if self.wavelength is not None and not self.wavelength > 0:
            raise ValueError("wavelength must be positive")

    @property
    def V_max(self) -> float:
        return self.V + self.V_prime

    @property
    def V_min(self) -> float:
        return self.V - self.V_prime


def tunneling_coupling(V, E_R: float = 1.0):
    """Nearest-neighbour hopping ``J(V)`` for barrier amplitude ``V``.

    ``J = E_R/2 * exp(-pi^2/4 * sqrt(v)) * (sqrt(v) + v**1.5)`` with ``v = V/E_R``.
    Accepts scalars or arrays.
    """
    v = np.asarray(V, dtype=float) / E_R
    if np.any(v < 0) or np.any(np.isnan(v)):
        raise ValueError("lattice amplitude must be non-negative")
    r = np.sqrt(v)
    J = 0.5 * E_R * np.exp(-(np.pi**2) / 4.0 * r) * (r + v * r)
    return float(J) if J.ndim == 0 else J


def coupling_ratio(params: LatticeParams) -> float:
    """Suppression ratio ``J(V + V') / J(V - V')`` of the closed vs open barrier."""
    if params.V_min <= 0:
        raise ValueError("V - V' must be positive")
    return tunneling_coupling(params.V_max, params.E_R) / tunneling_coupling(
        params.V_min, params.E_R
    )


def _ratio(V: float, V_prime: float) -> float:
    return tunneling_coupling(V + V_prime) / tunneling_coupling(V - V_prime)


def ratio_bounds(V: float) -> tuple[float, float]:
    """Range of ratios reachable with ``V - V' >= 1 E_R``: ``(lowest, 1)``."""
    return _ratio(V, V - MONOTONE_FLOOR), 1.0


def solve_secondary_amplitude(V: float, target_ratio: float) -> float:
    """Secondary amplitude ``V'`` at which the coupling ratio equals ``target_ratio``.

    Bisection on ``V' in [0, V - 1]`` where the ratio falls strictly with ``V'``.
    """
    if not V >= 2 * MONOTONE_FLOOR:
        raise ValueError(f"need V >= 2 E_R, got {V!r}")
    lo_ratio, hi_ratio = ratio_bounds(V)
    if not lo_ratio <= target_ratio <= hi_ratio:
        raise NoSolutionError(
            f"ratio {target_ratio!r} not reachable for V={V}: achievable range "
            f"[{lo_ratio:.3e}, 1]"
        )
    if target_ratio == hi_ratio:
        return 0.0
    if target_ratio == lo_ratio:
        return V - MONOTONE_FLOOR
    # log-space residual keeps the bracket well conditioned across decades
    f = lambda vp: np.log(_ratio(V, vp)) - np.log(target_ratio)  # noqa: E731
    return float(bisect(f, 0.0, V - MONOTONE_FLOOR, xtol=SOLVE_XTOL, maxiter=200))


def pulse_time(J_min: float) -> float:
    """Duration ``pi / J_min`` for a complete swap across the open barrier."""
    if not J_min > 0:
        raise ValueError(f"J_min must be positive, got {J_min!r}")
    return np.pi / J_min


def theta_from_timing(J_min: float, dt_actual: float) -> float:
    """Tunneling angle ``J_min * dt / 2`` reached by a pulse of length ``dt``."""
    if not J_min > 0:
        raise ValueError(f"J_min must be positive, got {J_min!r}")
    if dt_actual < 0:
        raise ValueError(f"pulse duration must be non-negative, got {dt_actual!r}")
    return 0.5 * J_min * dt_actual


def superlattice_potential(x, params: LatticeParams, config: Config, internal: int):
    """Potential seen by internal state ``internal`` in configuration ``config``.

    ``V cos(2 pi x) + s V' cos(pi x)`` with ``s = (-1)^i`` for the odd
    configuration and ``-(-1)^i`` for the even one.
    """
    if internal not in (0, 1):
        raise ValueError(f"internal state must be 0 or 1, got {internal!r}")
    if config == "odd":
        sign = (-1) ** internal
    elif config == "even":
        sign = -((-1) ** internal)
    else:
        raise ValueError(f"config must be 'odd' or 'even', got {config!r}")
    x = np.asarray(x, dtype=float)
    out = params.V * np.cos(2 * np.pi * x) + sign * params.V_prime * np.cos(np.pi * x)
    return float(out) if out.ndim == 0 else out


def adiabatic_time(omega_T: float) -> float:
    """Ramp time ``1 / omega_T`` for switching superlattices without heating.

    Returns seconds for ``omega_T`` in 1/s (30e3 -> 3.33e-5 s).
    """
    if not omega_T > 0:
        raise ValueError(f"trap frequency must be positive, got {omega_T!r}")
    return 1.0 / omega_T


def measurement_offset(N: int, wavelength: float) -> float:
    """Displacement ``N * wavelength`` of the readout beam for site ``N``."""
    if not wavelength > 0:
        raise ValueError("wavelength must be positive")
    return N * wavelength
