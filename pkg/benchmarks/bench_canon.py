#!/usr/bin/env python3
"""Benchmark the compiled canonicalization kernel against the numpy fallback.

Times the two hot operations behind enumeration and census keys: the full
enumeration of self-canonical codes, and batched single-graph
canonicalization.  Run after `pip install -e .`:

    python benchmarks/bench_canon.py
"""

import random
import time

from indexcoding import _canon_pure
from indexcoding.canon import _chunk_tables

try:
    from indexcoding import _canon_fast
except ImportError:
    _canon_fast = None

BACKENDS = [("pure (numpy)", _canon_pure)]
if _canon_fast is not None:
    BACKENDS.append(("fast (compiled)", _canon_fast))


def best_of(runs, fn):
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_enumerate(backend, n, runs=3):
    tables, shifts, masks = _chunk_tables(n)
    return best_of(runs, lambda: backend.canonical_reps(n * (n - 1), tables, shifts, masks))


def bench_single(backend, n, codes, runs=3):
    tables, shifts, masks = _chunk_tables(n)

    def run():
        for c in codes:
            backend.min_code_tables(c, tables, shifts, masks)

    return best_of(runs, run)


def main():
    rng = random.Random(0)
    print(f"{'operation':<34}" + "".join(f"{name:>18}" for name, _ in BACKENDS))
    for n in (4, 5):
        row = [bench_enumerate(impl, n) for _, impl in BACKENDS]
        label = f"enumerate all {n}-node classes"
        print(f"{label:<34}" + "".join(f"{t * 1e3:>15.1f} ms" for t in row))
    for n in (5, 6):
        codes = [rng.randrange(1 << (n * (n - 1))) for _ in range(2000)]
        row = [bench_single(impl, n, codes) for _, impl in BACKENDS]
        label = f"canonicalize 2000 random n={n}"
        print(f"{label:<34}" + "".join(f"{t * 1e3:>15.1f} ms" for t in row))
    if len(BACKENDS) == 1:
        print("\ncompiled kernel not built; showing fallback only")


if __name__ == "__main__":
    main()
