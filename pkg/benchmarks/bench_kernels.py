#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Times the Jacobi eigensolver and the Cholesky factor/solve pair at the
matrix sizes the experiments actually hit.  Run as:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from splitcs import _kernels_numba, _kernels_numpy

SIZES = (10, 50, 100, 200)
BACKENDS = {"numba": _kernels_numba, "numpy": _kernels_numpy}


def spd_matrix(rng, d):
    a = rng.standard_normal((d, d))
    return a @ a.T + d * np.eye(d)


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    rng = np.random.default_rng(0)
    # warm up the JIT so compilation is not part of the numbers
    warm = spd_matrix(rng, 8)
    _kernels_numba.jacobi_eigen(warm.copy(), 1e-12, 100)
    _kernels_numba.cholesky_factor(warm)

    print(f"{'kernel':<28}{'d':>6}{'numba':>12}{'numpy':>12}{'speedup':>10}")
    for d in SIZES:
        a = spd_matrix(rng, d)
        b = rng.standard_normal(d)
        repeats = 5 if d >= 100 else 20

        times = {}
        for name, mod in BACKENDS.items():
            times[name] = time_call(lambda m=mod: m.jacobi_eigen(a.copy(), 1e-12, 100), repeats)
        print(
            f"{'jacobi_eigen':<28}{d:>6}{times['numba']*1e3:>10.2f}ms"
            f"{times['numpy']*1e3:>10.2f}ms{times['numpy']/times['numba']:>9.1f}x"
        )

        for name, mod in BACKENDS.items():
            def run(m=mod):
                lo, _ = m.cholesky_factor(a)
                m.solve_lower_transpose(lo, m.solve_lower(lo, b))
            times[name] = time_call(run, repeats)
        print(
            f"{'cholesky factor+solve':<28}{d:>6}{times['numba']*1e3:>10.2f}ms"
            f"{times['numpy']*1e3:>10.2f}ms{times['numpy']/times['numba']:>9.1f}x"
        )


if __name__ == "__main__":
    main()
