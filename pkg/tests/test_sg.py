"""Generic Grundy evaluation, Nim, and the octal-4.3 reference game."""

import itertools
import random

import pytest

from decompgame import (
    StateLimitError,
    grundy_eval,
    mex,
    nim_state,
    nim_sum,
    nim_winning_move,
    octal43_grundy,
    octal43_heaps_grundy,
)
from decompgame.sg import nim_moves, octal43_moves


def test_mex_examples():
    assert mex([1, 3, 5]) == 0
    assert mex([0, 1, 3, 5]) == 2
    assert mex([]) == 0
    assert mex([0, 1, 2, 3]) == 4
    assert mex([2, 2, 0]) == 1


def test_mex_properties():
    rng = random.Random(77)
    for _ in range(500):
        values = {rng.randrange(12) for _ in range(rng.randrange(10))}
        m = mex(values)
        assert m not in values
        assert all(v in values for v in range(m))


def test_nim_sum_examples():
    assert nim_sum([21, 11, 6]) == 24
    assert nim_sum([]) == 0
    assert nim_sum([7]) == 7
    assert nim_sum([5, 5]) == 0


def test_nim_sum_properties():
    rng = random.Random(78)
    for _ in range(500):
        a, b, c = (rng.randrange(256) for _ in range(3))
        assert nim_sum([a, b]) == nim_sum([b, a])
        assert nim_sum([nim_sum([a, b]), c]) == nim_sum([a, nim_sum([b, c])])
        assert nim_sum([a, 0]) == a
        assert nim_sum([a, a]) == 0


def test_grundy_eval_terminal_state_is_zero():
    assert grundy_eval("done", lambda s: []) == 0


def test_grundy_eval_empty_outcome_counts_as_a_move():
    # one move to nothing: value mex{0} = 1
    assert grundy_eval("go", lambda s: [()] if s == "go" else []) == 1


def test_grundy_eval_detects_cycles():
    with pytest.raises(ValueError, match="cycle"):
        grundy_eval(0, lambda s: [(s,)])


def test_grundy_eval_state_cap():
    moves = lambda s: [(s - 1,)] if s > 0 else []
    with pytest.raises(StateLimitError):
        grundy_eval(500, moves, state_cap=10)
    assert grundy_eval(500, moves, state_cap=502) == 0


def test_grundy_eval_handles_deep_graphs_without_recursion():
    # depth beyond the default interpreter recursion limit
    moves = lambda s: [(s - 1,)] if s > 0 else []
    memo = {}
    assert grundy_eval(5000, moves, memo=memo) == 0
    assert len(memo) == 5001


def test_grundy_eval_memo_reuse_is_consistent():
    shared = {}
    first = grundy_eval(nim_state([9, 4]), nim_moves, memo=shared)
    again = grundy_eval(nim_state([9, 4]), nim_moves, memo=shared)
    fresh = grundy_eval(nim_state([9, 4]), nim_moves)
    assert first == again == fresh == 13


def test_nim_state_normalizes():
    assert nim_state([0, 3, 1, 0, 2]) == (1, 2, 3)
    assert nim_state([]) == ()
    with pytest.raises(ValueError):
        nim_state([-1])


def test_nim_grundy_matches_nim_sum_exhaustively():
    # every multiset of at most 4 heaps with sizes at most 12
    memo = {}
    sizes = range(0, 13)
    for heaps in itertools.combinations_with_replacement(sizes, 4):
        state = nim_state(heaps)
        assert grundy_eval(state, nim_moves, memo=memo) == nim_sum(state), state


def test_nim_winning_move_examples():
    assert nim_winning_move([21, 11, 6]) == (21, 13)
    assert nim_winning_move([3, 5]) == (5, 3)
    assert nim_winning_move([]) is None
    assert nim_winning_move([4, 4]) is None
    assert nim_winning_move([1]) == (1, 0)


def test_nim_winning_move_properties():
    rng = random.Random(79)
    for _ in range(1000):
        heaps = [rng.randrange(32) for _ in range(rng.randrange(1, 6))]
        state = nim_state(heaps)
        move = nim_winning_move(state)
        if nim_sum(state) == 0:
            assert move is None
            continue
        h, target = move
        assert h in state and 0 <= target < h
        rest = list(state)
        rest.remove(h)
        assert nim_sum(rest + [target]) == 0
        # tie-break: largest winning heap, then largest removal
        winners = [
            (a, b)
            for a in set(state)
            for b in range(a)
            if nim_sum([x for x in state if x != a] + [a] * (state.count(a) - 1) + [b]) == 0
        ]
        assert move == max(winners, key=lambda ab: (ab[0], ab[0] - ab[1]))


def test_octal43_single_heap_values():
    # hand-checked start of the series
    assert [octal43_grundy(g) for g in range(8)] == [0, 1, 2, 0, 2, 0, 2, 0]


def test_octal43_moves_shape():
    assert sorted(octal43_moves(1)) == [()]
    assert sorted(octal43_moves(2)) == [(1,), (1, 1)]
    assert sorted(octal43_moves(5)) == [(1, 4), (2, 3), (4,)]


def test_octal43_multiset_matches_whole_graph_evaluation():
    # independent route: evaluate heap multisets as one game graph,
    # splitting and removing without any nim-sum shortcut
    def multiset_moves(state):
        for i, h in enumerate(state):
            if i > 0 and state[i - 1] == h:
                continue
            rest = state[:i] + state[i + 1 :]
            if h >= 1:
                yield (tuple(sorted(rest + (h - 1,))) if h > 1 else rest,)
            for a in range(1, h // 2 + 1):
                yield (tuple(sorted(rest + (a, h - a))),)

    memo = {}
    for total in range(10):
        for heaps in _partitions(total):
            state = nim_state(heaps)
            whole = grundy_eval(state, multiset_moves, memo=memo)
            assert whole == octal43_heaps_grundy(state), state


def _partitions(total, smallest=1):
    if total == 0:
        yield ()
        return
    for first in range(smallest, total + 1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest
