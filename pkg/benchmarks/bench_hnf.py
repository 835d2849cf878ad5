"""Benchmark the compiled row-reduction kernel against the pure fallback.

Runs Hermite reduction (with transform) and matrix multiplication on seeded
random inputs of growing size and prints a timing table.  Usage::

    python3 benchmarks/bench_hnf.py [--repeats N]
"""

import argparse
import random
import time

from adelcat import _hnf_py

try:
    from adelcat import _hnf_cy
except ImportError:
    _hnf_cy = None


def random_rows(rng, dim, max_entry):
    return [[rng.randint(-max_entry, max_entry) for _ in range(dim)] for _ in range(dim)]


def time_kernel(kernel, inputs, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for rows, n in inputs:
            kernel.hnf_rows(rows, n, True)
        best = min(best, time.perf_counter() - start)
    return best


def time_mul(kernel, inputs, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for a, b, k, n in inputs:
            kernel.mul_rows(a, b, k, n)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _hnf_cy is None:
        print("compiled kernel not built; showing pure-Python timings only")

    print(f"{'case':<28}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    rng = random.Random(99)
    for dim, entry, count in ((10, 9, 40), (25, 9, 10), (45, 9, 3), (20, 10**6, 10)):
        inputs = [(random_rows(rng, dim, entry), dim) for _ in range(count)]
        pure = time_kernel(_hnf_py, inputs, args.repeats)
        label = f"hnf {count}x {dim}x{dim} |e|<={entry}"
        if _hnf_cy is not None:
            comp = time_kernel(_hnf_cy, inputs, args.repeats)
            print(f"{label:<28}{pure:>12.4f}{comp:>14.4f}{pure / comp:>9.2f}x")
        else:
            print(f"{label:<28}{pure:>12.4f}{'-':>14}{'-':>10}")

    for dim, count in ((30, 30), (80, 5)):
        inputs = []
        for _ in range(count):
            a = random_rows(rng, dim, 9)
            b = random_rows(rng, dim, 9)
            inputs.append((a, b, dim, dim))
        pure = time_mul(_hnf_py, inputs, args.repeats)
        label = f"mul {count}x {dim}x{dim}"
        if _hnf_cy is not None:
            comp = time_mul(_hnf_cy, inputs, args.repeats)
            print(f"{label:<28}{pure:>12.4f}{comp:>14.4f}{pure / comp:>9.2f}x")
        else:
            print(f"{label:<28}{pure:>12.4f}{'-':>14}{'-':>10}")


if __name__ == "__main__":
    main()
