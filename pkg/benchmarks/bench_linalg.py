"""Benchmark the two RREF backends (compiled kernel vs numpy fallback).

The mod-p row reduction is the hot kernel behind the brute-force oracle,
the deformation solvers, and the resolution pruning, so this is the
comparison that decides whether building the extension is worth it.

Usage:
    python benchmarks/bench_linalg.py [--sizes 100x100,300x200] [--repeat 5]
"""

import argparse
import random
import time

import numpy as np

from hfstrata.linalg import _fallback

try:
    from hfstrata.linalg import _kernel
except ImportError:
    _kernel = None

P = 32003


def random_matrix(rng, m, n, density=0.6):
    a = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            if rng.random() < density:
                a[i, j] = rng.randrange(P)
    return a


def bench(fn, base, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        work = np.ascontiguousarray(base.copy())
        t0 = time.perf_counter()
        result = fn(work, P)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50x50,100x100,200x200,400x300,600x600")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = []
    for token in args.sizes.split(","):
        m, n = token.lower().split("x")
        sizes.append((int(m), int(n)))

    print(f"p = {P}, repeat = {args.repeat} (best of)")
    header = f"{'size':>10} {'numpy fallback':>16} {'compiled kernel':>16} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for m, n in sizes:
        base = random_matrix(rng, m, n)
        t_py, r_py = bench(_fallback.rref_inplace, base, args.repeat)
        if _kernel is None:
            print(f"{m}x{n:>5} {t_py * 1e3:>14.2f}ms {'(not built)':>16} {'-':>9}")
            continue
        t_c, r_c = bench(_kernel.rref_inplace, base, args.repeat)
        assert r_py == r_c, "backends disagree"
        print(
            f"{m}x{n:>5} {t_py * 1e3:>14.2f}ms {t_c * 1e3:>14.2f}ms "
            f"{t_py / t_c:>8.2f}x"
        )


if __name__ == "__main__":
    main()
