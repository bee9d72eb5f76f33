"""Shared generators for tests: exhaustive and random positions."""

from __future__ import annotations

import random

from decompgame import Position, Surface, make_position


def all_surfaces(max_genus: int) -> list[Surface]:
    """Every non-sphere surface with genus <= max_genus, canonical order."""
    out = [Surface("o", g) for g in range(1, max_genus + 1)]
    out += [Surface("n", g) for g in range(1, max_genus + 1)]
    return out


def positions_up_to(total_genus: int) -> list[Position]:
    """Every canonical position with total genus <= the budget, empty included."""
    pool = all_surfaces(total_genus)
    found: list[Position] = []

    def rec(start: int, remaining: int, acc: list[Surface]) -> None:
        found.append(make_position(acc))
        for i in range(start, len(pool)):
            s = pool[i]
            if s.genus <= remaining:
                acc.append(s)
                rec(i, remaining - s.genus, acc)
                acc.pop()

    rec(0, total_genus, [])
    return found


def random_position(
    rng: random.Random,
    *,
    max_components: int = 5,
    max_genus: int = 20,
    min_components: int = 0,
) -> Position:
    count = rng.randint(min_components, max_components)
    return make_position(
        Surface(rng.choice("on"), rng.randint(1, max_genus)) for _ in range(count)
    )
