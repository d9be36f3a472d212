"""Inner-loop kernels for the walk, in two interchangeable backends.

Amplitudes are stored as a ``(2, W)`` complex array: row = internal state,
column ``j`` = lattice site ``x = j - L`` with ``W = 2L + 1``.

A pair-rotation step is described per internal state by a start index ``j0``:
columns ``(j0, j0+1), (j0+2, j0+3), ...`` form the double wells. A column left
without a partner at either edge is not touched; callers guard the edges.

The backend is picked at import time from ``LATTICEWALK_BACKEND``
(``numba`` or ``numpy``). Without the variable, numba is used when it
imports, numpy otherwise.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

ENV_FLAG = "LATTICEWALK_BACKEND"


# ---------------------------------------------------------------------------
# pure numpy
# ---------------------------------------------------------------------------


def _np_coin_apply(amps, coin):
    return coin @ amps


def _np_pair_rotate(amps, starts, c, s):
    out = amps.copy()
    width = amps.shape[1]
    for i in range(2):
        j0 = starts[i]
        npairs = (width - j0) // 2
        if npairs == 0:
            continue
        stop = j0 + 2 * npairs
        a = amps[i, j0:stop:2]
        b = amps[i, j0 + 1 : stop : 2]
        out[i, j0:stop:2] = c * a + 1j * s * b
        out[i, j0 + 1 : stop : 2] = 1j * s * a + c * b
    return out


def _np_evolve(amps, coin, cos_t, sin_t, starts):
    n = cos_t.shape[0]
    snaps = np.empty((n + 1,) + amps.shape, dtype=np.complex128)
    snaps[0] = amps
    cur = amps
    for k in range(n):
        cur = _np_pair_rotate(coin @ cur, starts[k], cos_t[k], sin_t[k])
        snaps[k + 1] = cur
    return snaps


NUMPY = SimpleNamespace(
    name="numpy",
    coin_apply=_np_coin_apply,
    pair_rotate=_np_pair_rotate,
    evolve=_np_evolve,
)


# ---------------------------------------------------------------------------
# numba
# ---------------------------------------------------------------------------


def _build_numba():
    from . import _numba_kernels as nk

    return SimpleNamespace(
        name="numba",
        coin_apply=nk.coin_apply,
        pair_rotate=nk.pair_rotate,
        evolve=nk.evolve,
    )


_NUMBA = None


def get_backend(name: str | None = None) -> SimpleNamespace:
    """Return the kernel namespace for ``name`` (``"numba"`` or ``"numpy"``).

    ``None`` resolves through the environment flag. Asking for numba
    explicitly raises ImportError when it is unavailable; the implicit
    default silently falls back to numpy.
    """
    global _NUMBA
    explicit = name is not None
    if name is None:
        name = os.environ.get(ENV_FLAG, "numba").strip().lower() or "numba"
    if name == "numpy":
        return NUMPY
    if name != "numba":
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    if _NUMBA is None:
        try:
            _NUMBA = _build_numba()
        except ImportError:
            if explicit:
                raise
            return NUMPY
    return _NUMBA


BACKEND = get_backend()
