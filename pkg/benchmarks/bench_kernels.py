"""Benchmark the DP kernels: numba backend vs the vectorized numpy fallback.

Usage:
    python benchmarks/bench_kernels.py [--limit 12000] [--repeats 3]

Each kernel gets one warmup call (numba compiles on first use), then the
best of --repeats timed runs is reported.  The pure-Python loops are also
timed at limit/10 for scale.  Outputs are checked equal before timing.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from decompgame import kernels


def best_of(fn, args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=12000, help="series length")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    limit = args.limit

    ovalues = kernels.orientable_values(limit)
    o_short, o_long = kernels.orientable_lengths(limit)

    jitted = kernels.BACKEND == "numba"
    print(f"active backend: {kernels.BACKEND}   limit: {limit}   repeats: {args.repeats}")
    if not jitted:
        print("numba disabled or unavailable: timing the numpy path only\n")

    cases = [
        ("orientable values", kernels._o_values_impl, kernels._orientable_values_np, (limit,)),
        (
            "nonorientable values",
            kernels._n_values_impl,
            kernels._nonorientable_values_np,
            (limit, ovalues),
        ),
        ("orientable lengths", kernels._o_lengths_impl, kernels._orientable_lengths_np, (limit,)),
        (
            "nonorientable lengths",
            kernels._n_lengths_impl,
            kernels._nonorientable_lengths_np,
            (limit, o_short, o_long),
        ),
    ]

    header = f"{'kernel':<24}{'numba':>10}{'numpy':>10}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    def as_arrays(result):
        return result if isinstance(result, tuple) else (result,)

    for name, fast, numpy_impl, call_args in cases:
        expected = numpy_impl(*call_args)
        got = fast(*call_args)  # warmup + correctness in one
        for a, b in zip(as_arrays(got), as_arrays(expected)):
            np.testing.assert_array_equal(a, b)

        numpy_t = best_of(numpy_impl, call_args, args.repeats)
        if jitted:
            numba_t = best_of(fast, call_args, args.repeats)
            print(f"{name:<24}{numba_t * 1e3:>8.1f}ms{numpy_t * 1e3:>8.1f}ms{numpy_t / numba_t:>9.1f}x")
        else:
            print(f"{name:<24}{'-':>10}{numpy_t * 1e3:>8.1f}ms{'-':>10}")

    small = max(limit // 10, 1)
    t = best_of(kernels._orientable_values_py, (small,), 1)
    print(f"\npure-Python loop reference: orientable values at limit {small}: {t * 1e3:.1f}ms")


if __name__ == "__main__":
    main()
