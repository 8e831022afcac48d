#!/usr/bin/env python3
"""Time the hot kernels on the numba and numpy paths.

Run:  python benchmarks/bench_kernels.py [--repeat N]

The jit path is compiled (and warmed) before timing; first-call compilation
cost is reported separately. With ROTAMENISCUS_BACKEND=numpy the package
itself will use the numpy path regardless of what this script measures.
"""
import argparse
import time

import numpy as np

from rotameniscus import kernels
from rotameniscus._backend import USE_NUMBA, backend_name


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    r_grid = np.linspace(0.0, 0.999, 200_000)
    t_nodes = np.linspace(1e-6, 1.0, 1024)

    cases = [
        ("h_prime_grid(200k nodes)",
         lambda f: f(r_grid, 0.5, 12.0),
         kernels.h_prime_grid_numpy,
         kernels.h_prime_grid if USE_NUMBA else None),
        ("endpoint_integrand(200k nodes)",
         lambda f: f(r_grid, 3.9),
         kernels.endpoint_integrand_numpy,
         kernels.endpoint_integrand if USE_NUMBA else None),
        ("miller_tables(1024 x 400)",
         lambda f: f(t_nodes, 400),
         kernels.miller_tables_numpy,
         kernels.miller_tables if USE_NUMBA else None),
        ("series_products(5000)",
         lambda f: f(5000),
         kernels.series_products_numpy,
         kernels.series_products if USE_NUMBA else None),
        ("cp_block_sum(p=12, 1e6 terms)",
         lambda f: f(12, 6, 1_000_006),
         kernels.cp_block_sum_numpy,
         kernels.cp_block_sum if USE_NUMBA else None),
    ]

    print(f"selected backend: {backend_name()}")
    if not USE_NUMBA:
        print("numba unavailable or disabled; only the numpy path is timed\n")

    header = f"{'kernel':34s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, call, f_numpy, f_numba in cases:
        t_np = best_of(lambda: call(f_numpy), args.repeat)
        if f_numba is not None:
            t0 = time.perf_counter()
            call(f_numba)  # compile + first run
            compile_time = time.perf_counter() - t0
            t_nb = best_of(lambda: call(f_numba), args.repeat)
            print(f"{name:34s} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms "
                  f"{t_np / t_nb:7.2f}x   (first call {compile_time:.2f}s)")
        else:
            print(f"{name:34s} {t_np * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")


if __name__ == "__main__":
    main()
