"""Generic Sprague-Grundy evaluation, plus Nim and octal-4.3 reference games.

The evaluator works on any finite acyclic game given as a move function.
A move's outcome is a tuple of independent component states; the outcome's
value is the nim sum of the component values, so sums of games come for
free.  An empty outcome is a move to nothing (value 0), and a state with no
moves at all is lost for the player to move (value 0).
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable

State = Hashable
Outcome = tuple
MoveFn = Callable[[State], Iterable[Outcome]]

DEFAULT_STATE_CAP = 10**7


class StateLimitError(RuntimeError):
    """Evaluation touched more distinct states than the configured cap."""


def mex(values: Iterable[int]) -> int:
    """Minimum excludant: least non-negative integer not in ``values``."""
    present = set(values)
    v = 0
    while v in present:
        v += 1
    return v


def nim_sum(values: Iterable[int]) -> int:
    """XOR of all values; 0 for the empty collection."""
    total = 0
    for v in values:
        total ^= v
    return total


def grundy_eval(
    state: State,
    moves: MoveFn,
    *,
    memo: dict[State, int] | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
) -> int:
    """Grundy value of ``state`` under ``moves``, by memoized mex recursion.

    ``moves(state)`` must yield every legal move as a tuple of independent
    component states.  The game graph must be finite and acyclic; a cycle
    raises ``ValueError``, and visiting more than ``state_cap`` distinct
    states raises :class:`StateLimitError`.  Passing a shared ``memo`` dict
    reuses values across calls.
    """
    if memo is None:
        memo = {}
    in_flight: set[State] = set()

    # explicit stack: positions can be deep enough to bother the C recursion limit
    def value(s: State) -> int:
        if s in memo:
            return memo[s]
        stack: list[tuple[State, list[Outcome], list[int] | None]] = [(s, [], None)]
        while stack:
            cur, pending, opt_values = stack[-1]
            if opt_values is None:
                if cur in memo:  # resolved while queued behind a sibling
                    stack.pop()
                    continue
                if cur in in_flight:
                    raise ValueError(f"cycle detected at state {cur!r}")
                if len(memo) + len(in_flight) >= state_cap:
                    raise StateLimitError(
                        f"more than {state_cap} distinct states reachable"
                    )
                in_flight.add(cur)
                pending.extend(moves(cur))
                opt_values = []
                stack[-1] = (cur, pending, opt_values)
            # resolve each outcome whose components are all memoized
            progressed = True
            while pending and progressed:
                outcome = pending[-1]
                missing = [c for c in outcome if c not in memo]
                if missing:
                    progressed = False
                    for c in missing:
                        stack.append((c, [], None))
                else:
                    pending.pop()
                    opt_values.append(nim_sum(memo[c] for c in outcome))
            if not pending:
                memo[cur] = mex(opt_values)
                in_flight.discard(cur)
                stack.pop()
        return memo[s]

    return value(state)


# ---------------------------------------------------------------------------
# Nim


def nim_state(heaps: Iterable[int]) -> tuple[int, ...]:
    """Canonical Nim state: sorted tuple of positive heap sizes."""
    cleaned = []
    for h in heaps:
        if h < 0:
            raise ValueError(f"heap sizes must be >= 0, got {h}")
        if h > 0:
            cleaned.append(h)
    return tuple(sorted(cleaned))


def nim_moves(state: tuple[int, ...]) -> Iterable[tuple]:
    """Single-component outcomes of reducing one heap to any smaller size."""
    for i, h in enumerate(state):
        if i > 0 and state[i - 1] == h:
            continue  # equal heaps give identical successors
        rest = state[:i] + state[i + 1 :]
        for smaller in range(h):
            yield (nim_state(rest + (smaller,)),)


def nim_winning_move(heaps: Iterable[int]) -> tuple[int, int] | None:
    """A winning Nim reduction as ``(heap_size, new_size)``, or None.

    Ties broken toward the largest heap, then the largest removal.
    """
    state = nim_state(heaps)
    total = nim_sum(state)
    if total == 0:
        return None
    best: tuple[int, int] | None = None
    for h in set(state):
        target = h ^ total
        if target < h:
            if best is None or (h, -target) > (best[0], -best[1]):
                best = (h, target)
    return best


# ---------------------------------------------------------------------------
# Octal game 4.3: take one counter from a heap, or split a heap in two


def octal43_moves(heap: int) -> Iterable[tuple]:
    """Moves from a single heap: remove one counter, or split into two heaps."""
    if heap >= 1:
        yield (heap - 1,) if heap > 1 else ()
    for a in range(1, heap // 2 + 1):
        yield (a, heap - a)


def octal43_grundy(heap: int, *, memo: dict | None = None) -> int:
    """Grundy value of a single octal-4.3 heap."""
    if heap < 0:
        raise ValueError(f"heap size must be >= 0, got {heap}")
    return grundy_eval(heap, octal43_moves, memo=memo)


def octal43_heaps_grundy(heaps: Iterable[int], *, memo: dict | None = None) -> int:
    """Grundy value of an octal-4.3 multiset of heaps (nim sum of the heaps)."""
    return nim_sum(octal43_grundy(h, memo=memo) for h in nim_state(heaps))
