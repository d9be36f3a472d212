"""numba versions of the kernels in ``_kernels``; imported only on demand."""

import numpy as np
from numba import njit


@njit(cache=True)
def coin_apply(amps, coin):
    width = amps.shape[1]
    out = np.empty((2, width), dtype=np.complex128)
    for j in range(width):
        u = amps[0, j]
        d = amps[1, j]
        out[0, j] = coin[0, 0] * u + coin[0, 1] * d
        out[1, j] = coin[1, 0] * u + coin[1, 1] * d
    return out


@njit(cache=True)
def _rotate_into(src, dst, starts, c, s):
    width = src.shape[1]
    isin = 1j * s
    for i in range(2):
        for j in range(width):
            dst[i, j] = src[i, j]
        j = starts[i]
        while j + 1 < width:
            a = src[i, j]
            b = src[i, j + 1]
            dst[i, j] = c * a + isin * b
            dst[i, j + 1] = isin * a + c * b
            j += 2


@njit(cache=True)
def pair_rotate(amps, starts, c, s):
    out = np.empty((2, amps.shape[1]), dtype=np.complex128)
    _rotate_into(amps, out, starts, c, s)
    return out


@njit(cache=True)
def evolve(amps, coin, cos_t, sin_t, starts):
    n = cos_t.shape[0]
    width = amps.shape[1]
    snaps = np.empty((n + 1, 2, width), dtype=np.complex128)
    snaps[0] = amps
    tmp = np.empty((2, width), dtype=np.complex128)
    for k in range(n):
        prev = snaps[k]
        for j in range(width):
            u = prev[0, j]
            d = prev[1, j]
            tmp[0, j] = coin[0, 0] * u + coin[0, 1] * d
            tmp[1, j] = coin[1, 0] * u + coin[1, 1] * d
        _rotate_into(tmp, snaps[k + 1], starts[k], cos_t[k], sin_t[k])
    return snaps
