"""Benchmark the two interchangeable mod-p elimination kernels.

The modular rank fast path has a numba-compiled kernel and a vectorized
numpy fallback (selected by GPW_PURE_NUMPY / numba availability).  This
script times both on the same matrices and cross-checks their answers,
then shows what the fast path buys the exact evaluator end to end.

Run from the repository root:

    python3 benchmarks/benchmark_rank_kernels.py
"""

import os
import time
from fractions import Fraction

import numpy as np

from gpw._kernels import HAS_NUMBA, PRIME, _rank_mod_p_njit, _rank_mod_p_numpy
from gpw.linalg import exact_rank

SEED = 20260814


def time_function(func, *args, n_runs=10, **kwargs):
    """Mean/std wall time over n_runs, plus the last result."""
    times = []
    result = None
    for _ in range(n_runs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        end = time.perf_counter()
        times.append(end - start)
    return float(np.mean(times)), float(np.std(times)), result


def random_matrix(rng, rows, cols, rank):
    """int64 matrix of the given rank (mod PRIME, with overwhelming
    probability): a product of thin factors with small entries so the
    plain int64 product cannot overflow."""
    left = rng.integers(0, 2**15, size=(rows, rank), dtype=np.int64)
    right = rng.integers(0, 2**15, size=(rank, cols), dtype=np.int64)
    return (left @ right) % PRIME


def main():
    print("=" * 64)
    print("mod-p rank kernels: numba vs numpy")
    print("=" * 64)
    print(f"numba available: {HAS_NUMBA}")
    print(f"prime: {PRIME}")
    print()

    rng = np.random.default_rng(SEED)
    warm = random_matrix(rng, 8, 8, 5)
    if HAS_NUMBA:
        started = time.perf_counter()
        _rank_mod_p_njit(warm.copy(), np.int64(PRIME))
        print(f"numba warmup (first call, includes compilation): "
              f"{time.perf_counter() - started:.3f}s")
        print()

    cases = [
        (60, 60, 45, 50),
        (200, 200, 150, 10),
        (400, 300, 250, 5),
    ]
    for rows, cols, rank, n_runs in cases:
        print("-" * 64)
        print(f"matrix {rows}x{cols}, rank {rank}  ({n_runs} runs)")
        print("-" * 64)
        matrix = random_matrix(rng, rows, cols, rank)

        np_mean, np_std, np_rank = time_function(
            lambda: _rank_mod_p_numpy(matrix.copy(), PRIME), n_runs=n_runs
        )
        print(f"numpy : {np_mean * 1e3:8.2f} +/- {np_std * 1e3:.2f} ms "
              f"(rank {np_rank})")

        if HAS_NUMBA:
            nb_mean, nb_std, nb_rank = time_function(
                lambda: _rank_mod_p_njit(matrix.copy(), np.int64(PRIME)),
                n_runs=n_runs,
            )
            print(f"numba : {nb_mean * 1e3:8.2f} +/- {nb_std * 1e3:.2f} ms "
                  f"(rank {nb_rank})")
            assert np_rank == nb_rank == rank, "kernels disagree"
            print(f"speedup: {np_mean / nb_mean:.2f}x")
        else:
            assert np_rank == rank
        print()

    print("=" * 64)
    print("end to end: exact rank with and without the modular fast path")
    print("=" * 64)
    matrix = random_matrix(rng, 90, 90, 90)
    rows = [[Fraction(int(v)) for v in row] for row in matrix]

    fast_mean, fast_std, fast_rank = time_function(
        exact_rank, rows, use_modular=True, n_runs=5
    )
    print(f"modular fast path : {fast_mean * 1e3:8.2f} +/- {fast_std * 1e3:.2f} ms "
          f"(rank {fast_rank})")

    slow_mean, slow_std, slow_rank = time_function(
        exact_rank, rows, use_modular=False, n_runs=3
    )
    print(f"pure Bareiss      : {slow_mean * 1e3:8.2f} +/- {slow_std * 1e3:.2f} ms "
          f"(rank {slow_rank})")
    assert fast_rank == slow_rank
    print(f"speedup: {slow_mean / fast_mean:.2f}x")
    print()
    print(f"GPW_PURE_NUMPY={os.environ.get('GPW_PURE_NUMPY', '')!r} "
          "(set to 1 to force the numpy kernel)")


if __name__ == "__main__":
    main()
