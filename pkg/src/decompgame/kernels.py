"""Hot DP kernels: brute-force Grundy series and game-length bounds.

Both DPs are O(limit^2) inner loops over all moves from every genus up to a
limit, which is the only numerically heavy part of the package.  Kernels are
numba-jitted when numba is importable; setting ``DECOMPGAME_NO_NUMBA=1``
(or any of 1/true/yes) forces the vectorized numpy fallback instead.  The
module attribute ``BACKEND`` reports which path is active, and the private
``_*_py`` / ``_*_np`` implementations stay importable so tests and the
benchmark can compare them directly.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "DECOMPGAME_NO_NUMBA"


def _numba_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# Loop implementations (plain Python, jitted below when numba is active).
# Options buffers are sized for the worst row: g//2 + 1 options for an
# orientable genus g, g + 2 for a nonorientable one; mex never exceeds the
# option count, so the seen buffer gets one extra slot.


def _orientable_values_py(limit: int) -> np.ndarray:
    values = np.zeros(limit + 1, dtype=np.int64)
    opts = np.empty(limit // 2 + 2, dtype=np.int64)
    seen = np.zeros(limit // 2 + 3, dtype=np.bool_)
    for g in range(1, limit + 1):
        m = 0
        opts[m] = values[g - 1]
        m += 1
        for a in range(1, g // 2 + 1):
            opts[m] = values[a] ^ values[g - a]
            m += 1
        values[g] = _mex_scratch(opts, m, seen)
    return values


def _nonorientable_values_py(limit: int, ovalues: np.ndarray) -> np.ndarray:
    values = np.zeros(limit + 1, dtype=np.int64)
    opts = np.empty(limit + 4, dtype=np.int64)
    seen = np.zeros(limit + 5, dtype=np.bool_)
    for g in range(1, limit + 1):
        m = 0
        opts[m] = values[g - 1]  # case c
        m += 1
        if (g - 1) % 2 == 0:  # case d
            opts[m] = ovalues[(g - 1) // 2]
            m += 1
        if g >= 2:
            opts[m] = values[g - 2]  # case e
            m += 1
            if (g - 2) % 2 == 0:  # case f
                opts[m] = ovalues[(g - 2) // 2]
                m += 1
        for a in range(1, g // 2 + 1):  # case g
            opts[m] = values[a] ^ values[g - a]
            m += 1
        for a in range(2, g, 2):  # case h
            opts[m] = ovalues[a // 2] ^ values[g - a]
            m += 1
        values[g] = _mex_scratch(opts, m, seen)
    return values


def _mex_scratch_py(opts: np.ndarray, m: int, seen: np.ndarray) -> int:
    for i in range(m):
        v = opts[i]
        if v <= m:
            seen[v] = True
    result = 0
    while seen[result]:
        result += 1
    for i in range(m):
        v = opts[i]
        if v <= m:
            seen[v] = False
    return result


def _orientable_lengths_py(limit: int) -> tuple[np.ndarray, np.ndarray]:
    shortest = np.zeros(limit + 1, dtype=np.int64)
    longest = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        smin = 1 + shortest[g - 1]
        lmax = 1 + longest[g - 1]
        for a in range(1, g // 2 + 1):
            s = 1 + shortest[a] + shortest[g - a]
            if s < smin:
                smin = s
            l = 1 + longest[a] + longest[g - a]
            if l > lmax:
                lmax = l
        shortest[g] = smin
        longest[g] = lmax
    return shortest, longest


def _nonorientable_lengths_py(
    limit: int,
    o_short: np.ndarray,
    o_long: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    shortest = np.zeros(limit + 1, dtype=np.int64)
    longest = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        smin = 1 + shortest[g - 1]  # case c
        lmax = 1 + longest[g - 1]
        if (g - 1) % 2 == 0:  # case d
            s = 1 + o_short[(g - 1) // 2]
            if s < smin:
                smin = s
            l = 1 + o_long[(g - 1) // 2]
            if l > lmax:
                lmax = l
        if g >= 2:
            s = 1 + shortest[g - 2]  # case e
            if s < smin:
                smin = s
            l = 1 + longest[g - 2]
            if l > lmax:
                lmax = l
            if (g - 2) % 2 == 0:  # case f
                s = 1 + o_short[(g - 2) // 2]
                if s < smin:
                    smin = s
                l = 1 + o_long[(g - 2) // 2]
                if l > lmax:
                    lmax = l
        for a in range(1, g // 2 + 1):  # case g
            s = 1 + shortest[a] + shortest[g - a]
            if s < smin:
                smin = s
            l = 1 + longest[a] + longest[g - a]
            if l > lmax:
                lmax = l
        for a in range(2, g, 2):  # case h
            s = 1 + o_short[a // 2] + shortest[g - a]
            if s < smin:
                smin = s
            l = 1 + o_long[a // 2] + longest[g - a]
            if l > lmax:
                lmax = l
        shortest[g] = smin
        longest[g] = lmax
    return shortest, longest


# ---------------------------------------------------------------------------
# Vectorized numpy implementations


def _mex_np(opts: np.ndarray) -> int:
    mask = np.zeros(opts.size + 1, dtype=bool)
    mask[opts[opts <= opts.size]] = True
    return int(np.argmin(mask))


def _orientable_values_np(limit: int) -> np.ndarray:
    values = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        half = g // 2
        opts = np.empty(half + 1, dtype=np.int64)
        opts[0] = values[g - 1]
        if half:
            opts[1:] = values[1 : half + 1] ^ values[g - 1 : g - half - 1 : -1]
        values[g] = _mex_np(opts)
    return values


def _nonorientable_values_np(limit: int, ovalues: np.ndarray) -> np.ndarray:
    values = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        singles = [values[g - 1]]
        if (g - 1) % 2 == 0:
            singles.append(ovalues[(g - 1) // 2])
        if g >= 2:
            singles.append(values[g - 2])
            if (g - 2) % 2 == 0:
                singles.append(ovalues[(g - 2) // 2])
        half = g // 2
        g_splits = values[1 : half + 1] ^ values[g - 1 : g - half - 1 : -1] if half else values[:0]
        a = np.arange(2, g, 2)
        h_splits = ovalues[a // 2] ^ values[g - a]
        opts = np.concatenate([np.asarray(singles, dtype=np.int64), g_splits, h_splits])
        values[g] = _mex_np(opts)
    return values


def _orientable_lengths_np(limit: int) -> tuple[np.ndarray, np.ndarray]:
    shortest = np.zeros(limit + 1, dtype=np.int64)
    longest = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        half = g // 2
        smin = 1 + shortest[g - 1]
        lmax = 1 + longest[g - 1]
        if half:
            s = 1 + shortest[1 : half + 1] + shortest[g - 1 : g - half - 1 : -1]
            l = 1 + longest[1 : half + 1] + longest[g - 1 : g - half - 1 : -1]
            smin = min(smin, int(s.min()))
            lmax = max(lmax, int(l.max()))
        shortest[g] = smin
        longest[g] = lmax
    return shortest, longest


def _nonorientable_lengths_np(
    limit: int,
    o_short: np.ndarray,
    o_long: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    shortest = np.zeros(limit + 1, dtype=np.int64)
    longest = np.zeros(limit + 1, dtype=np.int64)
    for g in range(1, limit + 1):
        smins = [1 + shortest[g - 1]]
        lmaxs = [1 + longest[g - 1]]
        if (g - 1) % 2 == 0:
            smins.append(1 + o_short[(g - 1) // 2])
            lmaxs.append(1 + o_long[(g - 1) // 2])
        if g >= 2:
            smins.append(1 + shortest[g - 2])
            lmaxs.append(1 + longest[g - 2])
            if (g - 2) % 2 == 0:
                smins.append(1 + o_short[(g - 2) // 2])
                lmaxs.append(1 + o_long[(g - 2) // 2])
        half = g // 2
        if half:
            s = 1 + shortest[1 : half + 1] + shortest[g - 1 : g - half - 1 : -1]
            l = 1 + longest[1 : half + 1] + longest[g - 1 : g - half - 1 : -1]
            smins.append(int(s.min()))
            lmaxs.append(int(l.max()))
        a = np.arange(2, g, 2)
        if a.size:
            s = 1 + o_short[a // 2] + shortest[g - a]
            l = 1 + o_long[a // 2] + longest[g - a]
            smins.append(int(s.min()))
            lmaxs.append(int(l.max()))
        shortest[g] = min(smins)
        longest[g] = max(lmaxs)
    return shortest, longest


# ---------------------------------------------------------------------------
# Backend selection

BACKEND = "numpy"
_o_values_impl = _orientable_values_np
_n_values_impl = _nonorientable_values_np
_o_lengths_impl = _orientable_lengths_np
_n_lengths_impl = _nonorientable_lengths_np

_mex_scratch = _mex_scratch_py  # rebound to the jitted version under numba

if not _numba_disabled():
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a hard dependency
        pass
    else:
        BACKEND = "numba"
        # the value kernels call _mex_scratch through this module's globals,
        # so rebinding it first lets the jitted callers link against the
        # jitted version
        _mex_scratch = njit(cache=True)(_mex_scratch_py)
        _o_values_impl = njit(cache=True)(_orientable_values_py)
        _n_values_impl = njit(cache=True)(_nonorientable_values_py)
        _o_lengths_impl = njit(cache=True)(_orientable_lengths_py)
        _n_lengths_impl = njit(cache=True)(_nonorientable_lengths_py)


def _check_limit(limit: int) -> None:
    if not isinstance(limit, int) or isinstance(limit, bool) or limit < 0:
        raise ValueError(f"limit must be a non-negative int, got {limit!r}")


def orientable_values(limit: int) -> np.ndarray:
    """Brute-force Grundy values of o0..o<limit> as an int64 array."""
    _check_limit(limit)
    return _o_values_impl(limit)


def nonorientable_values(limit: int) -> np.ndarray:
    """Brute-force Grundy values of n0..n<limit> as an int64 array."""
    _check_limit(limit)
    return _n_values_impl(limit, _o_values_impl(limit // 2))


def orientable_lengths(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(shortest, longest) possible game lengths from o0..o<limit>."""
    _check_limit(limit)
    return _o_lengths_impl(limit)


def nonorientable_lengths(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """(shortest, longest) possible game lengths from n0..n<limit>."""
    _check_limit(limit)
    o_short, o_long = _o_lengths_impl(limit // 2)
    return _n_lengths_impl(limit, o_short, o_long)
