"""Compare the numba and pure-numpy kernels on full walks.

    python benchmarks/bench_backends.py [--steps 50 200 1000] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from latticewalk import _kernels
from latticewalk.walk import run_walk


def kernel_inputs(n):
    L = n + 1
    amps = np.zeros((2, 2 * L + 1), dtype=np.complex128)
    amps[:, L] = np.array([1, 1j]) / np.sqrt(2)
    coin = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
    th = np.full(n, np.pi / 2 + 0.1)
    starts = np.array([[(k + L) % 2, (k + 1 + L) % 2] for k in range(n)], dtype=np.int64)
    return amps, coin, np.cos(th), np.sin(th), starts


def time_kernel(name, n, repeat):
    evolve = _kernels.get_backend(name).evolve
    args = kernel_inputs(n)
    evolve(*args)
    return min(timeit.repeat(lambda: evolve(*args), number=1, repeat=repeat))


def time_backend(name, n, repeat):
    _kernels.BACKEND = _kernels.get_backend(name)
    run_walk(n, offset=0.2)  # compile / warm caches
    best = min(timeit.repeat(lambda: run_walk(n, offset=0.2), number=1, repeat=repeat))
    probs = np.abs(run_walk(n, offset=0.2)[-1].amplitudes) ** 2
    return best, probs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, nargs="+", default=[50, 200, 1000, 3000])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print("evolve kernel only")
    print(f"{'steps':>6} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8}")
    for n in args.steps:
        k_np = time_kernel("numpy", n, args.repeat)
        k_nb = time_kernel("numba", n, args.repeat)
        print(f"{n:>6} {k_np * 1e3:>11.3f} {k_nb * 1e3:>11.3f} {k_np / k_nb:>8.1f}")

    print("\nrun_walk end to end (includes per-step state objects)")
    print(f"{'steps':>6} {'numpy [ms]':>11} {'numba [ms]':>11} {'speedup':>8} {'max |dP|':>10}")
    for n in args.steps:
        t_np, p_np = time_backend("numpy", n, args.repeat)
        t_nb, p_nb = time_backend("numba", n, args.repeat)
        diff = float(np.max(np.abs(p_np - p_nb)))
        print(f"{n:>6} {t_np * 1e3:>11.2f} {t_nb * 1e3:>11.2f} {t_np / t_nb:>8.1f} {diff:>10.1e}")


if __name__ == "__main__":
    main()
