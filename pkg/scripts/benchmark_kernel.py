#!/usr/bin/env python3
"""Benchmark the integrability-residual kernel: JIT-compiled vs pure numpy.

The complex-structure search evaluates the residual of J^2 = -Id together
with the Nijenhuis tensor thousands of times per restart.  This script
compares the compiled loop kernel (numba, used when available) against the
einsum-based numpy fallback (forced by HERMLIE_DISABLE_NUMBA=1) and checks
that the two agree to machine precision.

Usage:  python3 scripts/benchmark_kernel.py [--evals N]
"""
import argparse
import time

import numpy as np

from hermlie.catalog import get_entry
from hermlie.search import _j_residual_loops, _j_residual_numpy, _structure_tensor


def bench(fn, C, xs, warmup=3):
    for x in xs[:warmup]:
        fn(C, x)
    t0 = time.perf_counter()
    for x in xs:
        fn(C, x)
    return (time.perf_counter() - t0) / len(xs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--evals", type=int, default=2000,
                    help="number of residual evaluations per kernel")
    args = ap.parse_args()

    g = get_entry("s6.145^0").algebra_instance()
    C = _structure_tensor(g)
    rng = np.random.default_rng(0)
    xs = [rng.uniform(-2, 2, 36) for _ in range(args.evals)]

    kernels = [("numpy einsum", _j_residual_numpy)]
    try:
        from numba import njit

        compiled = njit(cache=True)(_j_residual_loops)
        kernels.append(("numba loops", lambda C, x: compiled(C, x)))
    except ImportError:
        print("numba not installed; benchmarking the numpy fallback only")

    results = {}
    for name, fn in kernels:
        per_call = bench(fn, C, xs)
        results[name] = per_call
        print(f"{name:>14s}: {per_call * 1e6:8.1f} us/eval "
              f"({1.0 / per_call:,.0f} evals/s)")

    if len(kernels) == 2:
        a = _j_residual_numpy(C, xs[0])
        b = np.asarray(kernels[1][1](C, xs[0]))
        err = np.abs(a - b).max()
        print(f"max |numpy - numba| on a sample input: {err:.2e}")
        assert err < 1e-12, "kernels disagree"
        speedup = results["numpy einsum"] / results["numba loops"]
        print(f"speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
