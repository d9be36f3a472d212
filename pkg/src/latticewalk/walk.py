"""State-vector evolution of the coined walk on a superlattice.

One iteration is a coin rotation on the internal state followed by a
state-dependent tunneling step. Odd steps move an atom from even to odd
sites, even steps move it back, so the double-well pairing alternates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

import numpy as np

from . import _kernels
from .distribution import Distribution

Parity = Literal["odd", "even"]

BOUNDARY_TOL = 1e-12
NORM_TOL = 1e-12
UNITARY_TOL = 1e-12

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)
SYMMETRIC_START = np.array([1.0, 1.0j], dtype=np.complex128) / np.sqrt(2.0)
PERFECT_THETA = np.pi / 2


class BoundaryOverflowError(RuntimeError):
    """Amplitude reached the edge of the finite lattice."""


@dataclass(frozen=True)
class CoinOperator:
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"coin must be 2x2, got shape {m.shape}")
        err = np.max(np.abs(m.conj().T @ m - np.eye(2)))
        if err > UNITARY_TOL:
            raise ValueError(f"coin is not unitary (max |U^dag U - 1| = {err:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @classmethod
    def hadamard(cls) -> "CoinOperator":
        return cls(HADAMARD)

    @classmethod
    def identity(cls) -> "CoinOperator":
        return cls(np.eye(2))


@dataclass(frozen=True)
class StepSpec:
    """Which superlattice configuration to pulse and the tunneling angle.

    ``theta`` is half the product of coupling and pulse duration; ``pi/2``
    swaps the two sites of every double well completely.
    """

    parity: Parity
    theta: float = PERFECT_THETA

    def __post_init__(self):
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")

    @classmethod
    def for_step(cls, k: int, theta: float = PERFECT_THETA) -> "StepSpec":
        """Spec for the ``k``-th step (1-based): odd, even, odd, ..."""
        if k < 1:
            raise ValueError("step index is 1-based")
        return cls(step_parity(k), float(theta))


@dataclass(frozen=True)
class WalkState:
    amplitudes: np.ndarray
    step_count: int = 0
    L: int = field(init=False)

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=np.complex128)
        if a.ndim != 2 or a.shape[0] != 2 or a.shape[1] % 2 != 1:
            raise ValueError(f"amplitudes must have shape (2, 2L+1), got {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)
        object.__setattr__(self, "L", (a.shape[1] - 1) // 2)

    @property
    def sites(self) -> np.ndarray:
        return np.arange(-self.L, self.L + 1)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def amplitude(self, internal: int, site: int) -> complex:
        if abs(site) > self.L:
            return 0j
        return complex(self.amplitudes[internal, site + self.L])

    def flat(self) -> np.ndarray:
        """Amplitudes as one vector, internal-major: index = i*(2L+1) + (x+L)."""
        return self.amplitudes.reshape(-1).copy()


def step_parity(k: int) -> Parity:
    return "odd" if k % 2 == 1 else "even"


def new_state(initial_internal: Sequence[complex], L: int) -> WalkState:
    """Atom localized at site 0 with the given internal (coin) state."""
    v = np.asarray(initial_internal, dtype=np.complex128).reshape(-1)
    if v.shape != (2,):
        raise ValueError("initial internal state must have two components")
    norm = float(np.sum(np.abs(v) ** 2))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"initial internal state is not normalized (|v|^2 = {norm!r})")
    if int(L) != L or L < 1:
        raise ValueError(f"lattice half-width must be an integer >= 1, got {L!r}")
    L = int(L)
    amps = np.zeros((2, 2 * L + 1), dtype=np.complex128)
    amps[:, L] = v
    return WalkState(amps, 0)


def _as_coin(coin) -> CoinOperator:
    return coin if isinstance(coin, CoinOperator) else CoinOperator(coin)


def apply_coin(state: WalkState, coin) -> WalkState:
    coin = _as_coin(coin)
    out = _kernels.BACKEND.coin_apply(state.amplitudes, coin.entries)
    return WalkState(out, state.step_count)


def pair_start(parity: Parity, internal: int) -> int:
    """Parity (0 even, 1 odd) of the left site of every double well.

    Odd configuration: internal 0 pairs {2l, 2l+1}, internal 1 pairs
    {2l-1, 2l}. The even configuration swaps the two.
    """
    if internal not in (0, 1):
        raise ValueError(f"internal state must be 0 or 1, got {internal!r}")
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    return internal ^ (parity == "even")


def pair_partition(parity: Parity, internal: int):
    """Pairing rule as a function ``site -> (left, right)`` of its double well."""
    r = pair_start(parity, internal)

    def partner(x: int) -> tuple[int, int]:
        left = x if (x - r) % 2 == 0 else x - 1
        return left, left + 1

    return partner


def _cos_sin(theta):
    # pi/2 is not representable; snap round-off so ideal steps keep exact parity
    c = np.cos(theta)
    s = np.sin(theta)
    c = np.where(np.abs(c) < 1e-15, 0.0, c)
    s = np.where(np.abs(s) < 1e-15, 0.0, s)
    return c, s


def _start_columns(parity: Parity, L: int) -> np.ndarray:
    # column j is site j - L
    return np.array([(pair_start(parity, i) + L) % 2 for i in (0, 1)], dtype=np.int64)


def _check_edges(amps: np.ndarray, step: int) -> None:
    edge = max(np.max(np.abs(amps[:, 0])), np.max(np.abs(amps[:, -1])))
    if edge > BOUNDARY_TOL:
        L = (amps.shape[1] - 1) // 2
        raise BoundaryOverflowError(
            f"amplitude {edge:.3e} at lattice edge +/-{L} after step {step}; "
            f"increase the half-width (need L >= steps + 1)"
        )


def apply_step(state: WalkState, spec: StepSpec) -> WalkState:
    """Tunneling pulse: rotate amplitudes inside each double well.

    Within a pair (a, b) the map is ``[[cos t, i sin t], [i sin t, cos t]]``.
    """
    starts = _start_columns(spec.parity, state.L)
    c, s = _cos_sin(spec.theta)
    out = _kernels.BACKEND.pair_rotate(state.amplitudes, starts, float(c), float(s))
    _check_edges(out, state.step_count + 1)
    return WalkState(out, state.step_count + 1)


def step_thetas(n_steps: int, theta=None, offset=None) -> np.ndarray:
    """Per-step rotation angles.

    ``offset`` is the dimensionless pulse-time error ``J_min * dt0`` applied
    identically at every step; ``theta`` is a scalar or per-step sequence.
    Giving neither yields perfect steps.
    """
    if theta is not None and offset is not None:
        raise ValueError("give either theta or offset, not both")
    if offset is not None:
        return np.full(n_steps, PERFECT_THETA + 0.5 * float(offset))
    if theta is None:
        return np.full(n_steps, PERFECT_THETA)
    t = np.asarray(theta, dtype=float)
    if t.ndim == 0:
        return np.full(n_steps, float(t))
    if t.shape != (n_steps,):
        raise ValueError(f"expected {n_steps} per-step angles, got {t.shape[0]}")
    return t.copy()


def run_walk(
    n_steps: int,
    initial_internal: Sequence[complex] = SYMMETRIC_START,
    coin=HADAMARD,
    theta=None,
    offset: float | None = None,
    L: int | None = None,
) -> list[WalkState]:
    """Evolve ``(S H)^n |psi_0>`` and return the state after every step.

    The returned list has ``n_steps + 1`` entries, starting with the
    initial state. Step ``k`` uses the odd configuration for odd ``k``.

    Parameters
    ----------
    n_steps : int
        Number of coin+step iterations.
    initial_internal : sequence of complex
        Normalized internal state of the atom at site 0.
    coin : CoinOperator or 2x2 array
        Applied before every step.
    theta : float or sequence, optional
        Tunneling angle, constant or one per step.
    offset : float, optional
        Pulse-time error in units of ``1/J_min``; sets
        ``theta = pi/2 + offset/2`` for every step.
    L : int, optional
        Lattice half-width, default ``n_steps + 1``.
    """
    if int(n_steps) != n_steps or n_steps < 0:
        raise ValueError(f"n_steps must be a non-negative integer, got {n_steps!r}")
    n_steps = int(n_steps)
    if L is None:
        L = n_steps + 1
    coin = _as_coin(coin)
    state = new_state(initial_internal, L)
    thetas = step_thetas(n_steps, theta, offset)
    starts = np.array(
        [_start_columns(step_parity(k), state.L) for k in range(1, n_steps + 1)],
        dtype=np.int64,
    ).reshape(n_steps, 2)
    cos_t, sin_t = _cos_sin(thetas)
    snaps = _kernels.BACKEND.evolve(
        state.amplitudes.copy(), coin.entries.copy(), cos_t, sin_t, starts
    )
    out = [state]
    for k in range(1, n_steps + 1):
        _check_edges(snaps[k], k)
        out.append(WalkState(snaps[k], k))
    return out


def position_distribution(state: WalkState, label: str = "") -> Distribution:
    """Probability per site over ``[-L, L]``, summed over internal states."""
    probs = np.sum(np.abs(state.amplitudes) ** 2, axis=0)
    return Distribution(state.sites, probs, state.step_count, label)
