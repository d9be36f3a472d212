"""Independent reference computations used by the tests.

Nothing here calls into the package's evolution code: the walk is rebuilt
as dense matrices over the full (internal x site) space, the tunneling step
as a matrix exponential of the pair-hopping generator.
"""

import numpy as np
from scipy.linalg import expm

H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PSI0 = np.array([1, 1j]) / np.sqrt(2)


def index(internal, x, L):
    return internal * (2 * L + 1) + (x + L)


def pairs(parity, internal, L):
    """Double wells for one configuration, enumerated from the shift operators."""
    out = []
    for l in range(-L - 2, L + 3):
        if parity == "odd":
            p = (2 * l, 2 * l + 1) if internal == 0 else (2 * l - 1, 2 * l)
        else:
            p = (2 * l - 1, 2 * l) if internal == 0 else (2 * l - 2, 2 * l - 1)
        if -L <= p[0] and p[1] <= L:
            out.append(p)
    return sorted(set(out))


def hopping_generator(parity, L):
    dim = 2 * (2 * L + 1)
    G = np.zeros((dim, dim))
    for i in (0, 1):
        for a, b in pairs(parity, i, L):
            G[index(i, a, L), index(i, b, L)] = 1
            G[index(i, b, L), index(i, a, L)] = 1
    return G


def dense_step(parity, theta, L):
    return expm(1j * theta * hopping_generator(parity, L))


def dense_coin(coin, L):
    return np.kron(coin, np.eye(2 * L + 1))


def literal_shift(parity, L):
    """Ideal one-directional shift written as the sum of projectors."""
    dim = 2 * (2 * L + 1)
    S = np.zeros((dim, dim))
    for l in range(-L, L + 1):
        if parity == "odd":
            moves = [(0, 2 * l, 2 * l + 1), (1, 2 * l, 2 * l - 1)]
        else:
            moves = [(0, 2 * l - 1, 2 * l), (1, 2 * l - 1, 2 * l - 2)]
        for i, src, dst in moves:
            if abs(src) <= L and abs(dst) <= L:
                S[index(i, dst, L), index(i, src, L)] = 1
    return S


def initial_vector(L, internal=PSI0):
    v = np.zeros(2 * (2 * L + 1), dtype=complex)
    v[index(0, 0, L)] = internal[0]
    v[index(1, 0, L)] = internal[1]
    return v


def dense_walk(n, theta, L, coin=H, internal=PSI0):
    """State vectors after 0..n steps via explicit matrix products."""
    v = initial_vector(L, internal)
    C = dense_coin(coin, L)
    steps = {p: dense_step(p, theta, L) for p in ("odd", "even")}
    out = [v]
    for k in range(1, n + 1):
        v = steps["odd" if k % 2 else "even"] @ (C @ v)
        out.append(v)
    return out


def literal_walk(n, L):
    v = initial_vector(L)
    C = dense_coin(H, L)
    S = {p: literal_shift(p, L) for p in ("odd", "even")}
    out = [v]
    for k in range(1, n + 1):
        v = S["odd" if k % 2 else "even"] @ (C @ v)
        out.append(v)
    return out


def dense_distribution(v, L):
    p = np.abs(v.reshape(2, 2 * L + 1)) ** 2
    return p.sum(axis=0)


# Worked states of the ideal walk, coefficients written out by hand.
E = np.exp(1j * np.pi / 4)
EC = np.exp(-1j * np.pi / 4)
WORKED = {
    1: {(0, 1): E / np.sqrt(2), (1, -1): EC / np.sqrt(2)},
    2: {
        (0, 2): E / 2, (0, 0): EC / 2,
        (1, 0): E / 2, (1, -2): -EC / 2,
    },
    3: {
        (0, 3): E / (2 * np.sqrt(2)),
        (0, 1): (E + EC) / (2 * np.sqrt(2)),
        (0, -1): -EC / (2 * np.sqrt(2)),
        (1, 1): E / (2 * np.sqrt(2)),
        (1, -1): -(E - EC) / (2 * np.sqrt(2)),
        (1, -3): EC / (2 * np.sqrt(2)),
    },
}


def worked_array(n, L):
    a = np.zeros((2, 2 * L + 1), dtype=complex)
    for (i, x), c in WORKED[n].items():
        a[i, x + L] = c
    return a


def global_phase_error(actual, expected):
    """Max component error after removing the best single global phase."""
    actual = np.asarray(actual).ravel()
    expected = np.asarray(expected).ravel()
    overlap = np.vdot(expected, actual)
    phase = overlap / abs(overlap)
    return float(np.max(np.abs(actual - phase * expected)))


def monte_carlo_classical(n, samples, rng):
    ends = 2 * rng.binomial(n, 0.5, size=samples) - n
    return ends
