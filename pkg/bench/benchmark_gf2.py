"""Benchmark the compiled GF(2) rank kernel against the pure-Python one.

Runs rank computations over random dense bitmask matrices of several sizes
and reports per-call timings and the speedup. Usage:

    python bench/benchmark_gf2.py [--sizes 64,128,256,512] [--repeats 20]
"""

import argparse
import random
import time

from orbitcohom import _gf2_py

try:
    from orbitcohom import _gf2core
except ImportError:
    _gf2core = None


def random_rows(size, rng):
    limit = (1 << size) - 1
    return [rng.randint(0, limit) for _ in range(size)]


def time_backend(rank_fn, matrices, size, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        checks = [rank_fn(list(rows), size) for rows in matrices]
        best = min(best, (time.perf_counter() - start) / len(matrices))
        if result is None:
            result = checks
        elif result != checks:
            raise AssertionError("nondeterministic rank results")
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,128,256,512")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--matrices", type=int, default=5,
                        help="random matrices per size")
    parser.add_argument("--seed", type=int, default=20260824)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'size':>6} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for size in sizes:
        matrices = [random_rows(size, rng) for _ in range(args.matrices)]
        py_time, py_ranks = time_backend(_gf2_py.gf2_rank, matrices, size,
                                         args.repeats)
        if _gf2core is None:
            print(f"{size:>6} {py_time * 1e3:>12.3f} {'(not built)':>12} {'-':>8}")
            continue
        c_time, c_ranks = time_backend(_gf2core.gf2_rank, matrices, size,
                                       args.repeats)
        if py_ranks != c_ranks:
            raise AssertionError(f"backends disagree at size {size}")
        print(f"{size:>6} {py_time * 1e3:>12.3f} {c_time * 1e3:>12.3f} "
              f"{py_time / c_time:>7.1f}x")


if __name__ == "__main__":
    main()
