"""DP kernels: backend selection, cross-implementation agreement, references."""

import functools
import os
import subprocess
import sys

import numpy as np

from decompgame import Surface, grundy_eval, surface_moves
from decompgame import kernels


def test_backend_matches_environment():
    expected = "numpy" if os.environ.get(kernels.ENV_FLAG, "").strip().lower() in (
        "1",
        "true",
        "yes",
    ) else "numba"
    assert kernels.BACKEND == expected


def test_env_flag_forces_numpy_backend_in_a_fresh_process():
    code = (
        "import decompgame.kernels as k;"
        "print(k.BACKEND);"
        "print(','.join(map(str, k.nonorientable_values(24))))"
    )
    env = {**os.environ, kernels.ENV_FLAG: "1"}
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    backend, values = proc.stdout.strip().splitlines()
    assert backend == "numpy"
    assert values == ",".join(map(str, kernels.nonorientable_values(24)))


def test_value_implementations_agree():
    limit = 64
    o = kernels.orientable_values(limit)
    np.testing.assert_array_equal(o, kernels._orientable_values_py(limit))
    np.testing.assert_array_equal(o, kernels._orientable_values_np(limit))
    n = kernels.nonorientable_values(limit)
    half = kernels.orientable_values(limit // 2)
    np.testing.assert_array_equal(n, kernels._nonorientable_values_py(limit, half))
    np.testing.assert_array_equal(n, kernels._nonorientable_values_np(limit, half))


def test_length_implementations_agree():
    limit = 64
    o_short, o_long = kernels.orientable_lengths(limit)
    for impl in (kernels._orientable_lengths_py, kernels._orientable_lengths_np):
        s, l = impl(limit)
        np.testing.assert_array_equal(o_short, s)
        np.testing.assert_array_equal(o_long, l)
    n_short, n_long = kernels.nonorientable_lengths(limit)
    half_short, half_long = kernels.orientable_lengths(limit // 2)
    for impl in (kernels._nonorientable_lengths_py, kernels._nonorientable_lengths_np):
        s, l = impl(limit, half_short, half_long)
        np.testing.assert_array_equal(n_short, s)
        np.testing.assert_array_equal(n_long, l)


def _reference_values(kind: str, limit: int) -> list[int]:
    # the generic engine walking real surface moves, no hand-rolled DP
    memo = {}

    def successors(surface):
        return [
            tuple(r.canonical() for r in m.results if r.genus > 0)
            for m in surface_moves(surface)
        ]

    return [grundy_eval(Surface(kind, g), successors, memo=memo) for g in range(limit + 1)]


def test_value_kernels_match_the_generic_engine():
    limit = 48
    np.testing.assert_array_equal(
        kernels.orientable_values(limit), _reference_values("o", limit)
    )
    np.testing.assert_array_equal(
        kernels.nonorientable_values(limit), _reference_values("n", limit)
    )


@functools.lru_cache(maxsize=None)
def _reference_bounds(surface: Surface) -> tuple[int, int]:
    moves = surface_moves(surface)
    if not moves:
        return (0, 0)
    shorts, longs = [], []
    for m in moves:
        parts = [_reference_bounds(r.canonical()) for r in m.results if r.genus > 0]
        shorts.append(1 + sum(p[0] for p in parts))
        longs.append(1 + sum(p[1] for p in parts))
    return (min(shorts), max(longs))


def test_length_kernels_match_the_recursive_reference():
    limit = 40
    o_short, o_long = kernels.orientable_lengths(limit)
    n_short, n_long = kernels.nonorientable_lengths(limit)
    for g in range(limit + 1):
        assert (o_short[g], o_long[g]) == _reference_bounds(Surface("o", g))
        assert (n_short[g], n_long[g]) == _reference_bounds(Surface("n", g))


def test_value_series_are_eventually_periodic():
    o = list(kernels.orientable_values(200))
    assert o[:2] == [0, 1]
    assert o[2:] == [2, 0] * 99 + [2]
    n = list(kernels.nonorientable_values(200))
    assert n[:3] == [0, 1, 2]
    assert n[3:] == ([4, 6, 0, 3] * 50)[:198]


def test_length_series_closed_forms():
    limit = 60
    o_short, o_long = kernels.orientable_lengths(limit)
    n_short, n_long = kernels.nonorientable_lengths(limit)
    for g in range(limit + 1):
        assert o_short[g] == g  # cutting one handle at a time is fastest
        assert n_short[g] == (g + 1) // 2  # two crosscaps at a time, plus one odd step
        if g >= 1:
            assert o_long[g] == 2 * g - 1
            assert n_long[g] == 2 * g - 1
    assert o_long[0] == n_long[0] == 0


def test_zero_limit_edge():
    assert list(kernels.orientable_values(0)) == [0]
    assert list(kernels.nonorientable_values(0)) == [0]
    s, l = kernels.nonorientable_lengths(0)
    assert list(s) == [0] and list(l) == [0]


def test_limit_validation():
    for bad in (-1, 2.0, "10", True):
        try:
            kernels.orientable_values(bad)
        except ValueError:
            continue
        raise AssertionError(f"limit {bad!r} should have been rejected")
