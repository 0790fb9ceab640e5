#!/usr/bin/env python3
"""Benchmark the compiled coefficient kernel against the pure-Python fallback.

Times the three hot operations behind verification scans: single products,
full exponentiations with a q^m-sized exponent, and a theorem7-style batch of
products.  Usage:

    python benchmarks/bench_kernels.py [--q 13] [--sizes 8,16,32,64] [--reps 5]
"""

import argparse
import random
import time

from binord import _kernels
from binord.extension_field import ExtField


def best_of(reps, thunk):
    times = []
    for _ in range(reps):
        start = time.perf_counter()
        thunk()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_backend(kernel_name, q, m, reps):
    field = ExtField(q, m, q - 1, backend=kernel_name)
    rng = random.Random(m)
    xs = tuple(rng.randrange(q) for _ in range(m))
    ys = tuple(rng.randrange(q) for _ in range(m))
    exponent = q ** m - 1

    n_mul = 2000
    def muls():
        acc = xs
        for _ in range(n_mul):
            acc = field.mul_coeffs(acc, ys)
    t_mul = best_of(reps, muls) / n_mul

    t_pow = best_of(reps, lambda: field.pow_coeffs(xs, exponent))

    n_prod = 500
    def batch():
        acc = field.one().coeffs
        for _ in range(n_prod):
            acc = field.mul_coeffs(acc, xs)
    t_batch = best_of(reps, batch) / n_prod

    return t_mul, t_pow, t_batch


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=13)
    parser.add_argument("--sizes", default="8,16,32,64")
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels.compiled is None:
        print("compiled kernel not built; nothing to compare")
        return

    print(f"q = {args.q}; times are best of {args.reps} runs")
    header = (f"{'m':>4}  {'mul py':>10} {'mul c':>10} {'speedup':>8}  "
              f"{'pow py':>10} {'pow c':>10} {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for m in sizes:
        py_mul, py_pow, _ = bench_backend("python", args.q, m, args.reps)
        c_mul, c_pow, _ = bench_backend("compiled", args.q, m, args.reps)
        print(f"{m:>4}  {py_mul * 1e6:>9.1f}u {c_mul * 1e6:>9.1f}u "
              f"{py_mul / c_mul:>7.1f}x  "
              f"{py_pow * 1e3:>9.2f}m {c_pow * 1e3:>9.2f}m "
              f"{py_pow / c_pow:>7.1f}x")


if __name__ == "__main__":
    main()
