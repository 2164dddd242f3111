#!/usr/bin/env python3
"""Timing comparison of the compiled kernels against their pure-Python twins.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeats 9 --poly-size 4096
"""

import argparse
import time

import numpy as np

from frobkit.kernels import _pure

try:
    from frobkit.kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(args):
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    zs = rng.standard_normal(args.poly_size) + 1j * rng.standard_normal(args.poly_size)

    # well-separated roots keep the iteration count stable between backends
    roots = np.array([1.0, -1.5, 2.0 + 1.0j, -0.5 - 2.0j, 3.0j])
    dk_coeffs = np.polynomial.polynomial.polyfromroots(roots)

    w0 = np.array([0.9 + 0.2j, 1.1, -0.4j])

    return [
        ("poly_eval_many", f"degree 7 x {args.poly_size}",
         lambda impl: impl.poly_eval_many(coeffs, zs)),
        ("durand_kerner", "degree 5, 100 solves",
         lambda impl: [impl.durand_kerner(dk_coeffs, 200, 1e-13)
                       for _ in range(100)]),
        ("rk4_top", f"{args.steps} steps",
         lambda impl: impl.rk4_top(2.0, w0, 3.5, args.steps)),
    ]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5,
                    help="timing repetitions; the best is reported")
    ap.add_argument("--poly-size", type=int, default=2048)
    ap.add_argument("--steps", type=int, default=20000)
    args = ap.parse_args()

    if _fast is None:
        print("compiled extension not importable; timing the pure backend only")

    header = f"{'kernel':<16} {'workload':<22} {'pure':>10}"
    if _fast is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, label, run in workloads(args):
        t_pure = best_of(lambda: run(_pure), args.repeats)
        line = f"{name:<16} {label:<22} {t_pure * 1e3:>8.2f}ms"
        if _fast is not None:
            t_fast = best_of(lambda: run(_fast), args.repeats)
            line += f" {t_fast * 1e3:>8.2f}ms {t_pure / t_fast:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
