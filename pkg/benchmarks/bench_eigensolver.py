#!/usr/bin/env python3
"""Benchmark the Jacobi kernels: compiled extension vs pure numpy fallback.

Two workloads:
  * the package's actual hot path -- partial transposes of truncated
    squeezed-vacuum mixtures (block-sparse, converge in a few sweeps);
  * dense random symmetric matrices (classic cyclic Jacobi behaviour).

numpy.linalg.eigvalsh timings are printed for context.

Usage: python3 benchmarks/bench_eigensolver.py [--repeats 3] [--dense 60 120 240]
"""

import argparse
import time

import numpy as np

from cvmix import fock_oracle
from cvmix._kernels import available_backends, jacobi_eigh


def best_of(repeats, fn):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_matrix(label, matrix, repeats):
    rows = {}
    for backend in available_backends():
        rows[backend] = best_of(repeats, lambda: jacobi_eigh(matrix, backend=backend))
    rows["numpy (LAPACK)"] = best_of(repeats, lambda: np.linalg.eigvalsh(matrix))
    dim = matrix.shape[0]
    print(f"{label:<34} dim={dim:<5}", end="")
    for name in ("compiled", "pure", "numpy (LAPACK)"):
        if name in rows:
            print(f"  {name}: {rows[name]*1e3:9.2f} ms", end="")
    if "compiled" in rows and "pure" in rows:
        print(f"  speedup: {rows['pure']/rows['compiled']:.1f}x", end="")
    print()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--dense", type=int, nargs="*", default=[60, 120, 240])
    parser.add_argument("--squeeze", type=float, nargs="*", default=[0.25, 0.5, 0.75])
    args = parser.parse_args()

    print(f"backends available: {', '.join(available_backends())}\n")

    print("partial transposes of vacuum mixtures (p=0.6, auto cutoff):")
    for r in args.squeeze:
        rho = fock_oracle.mixture_density(0.6, r)
        pt = fock_oracle.partial_transpose_fock(rho)
        bench_matrix(f"  PT mixture r={r}", pt, args.repeats)

    print("\ndense random symmetric matrices:")
    rng = np.random.default_rng(0)
    for n in args.dense:
        a = rng.standard_normal((n, n))
        a = (a + a.T) / 2.0
        bench_matrix(f"  dense n={n}", a, args.repeats)


if __name__ == "__main__":
    main()
