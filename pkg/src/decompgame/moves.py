"""Legal decomposition moves on single surfaces and on whole positions.

From an orientable surface of genus g the mover may
  a) cut down to o(g-1), or
  b) split into (oa, ob) with a, b > 0 and a + b = g.
From a nonorientable surface of genus g the mover may
  c) cut down to n(g-1),
  d) trade the whole thing for o((g-1)/2) when g is odd,
  e) cut down to n(g-2) when g >= 2,
  f) trade for o((g-2)/2) when g is even and >= 2,
  g) split into (na, nb) with a, b > 0 and a + b = g, or
  h) split into (o(a/2), nb) with a even, a, b > 0 and a + b = g.

Moves landing on the same multiset of surfaces are merged into one
:class:`Move` carrying the union of case labels; the raw (pre-normalized)
results of the alphabetically first case are kept for display, which is how
the sphere reached from n1 or n2 renders as ``n0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surfaces import (
    NONORIENTABLE,
    ORIENTABLE,
    Position,
    Surface,
    make_position,
)


@dataclass(frozen=True)
class Move:
    """One deduplicated move from a single surface.

    ``results`` are kept exactly as produced by the move case (the sphere
    may appear in its raw ``n0`` spelling); canonicalize before comparing
    outcomes.  ``split_params`` is the (a, b) pair for splitting cases,
    None for single-result cases.
    """

    source: Surface
    case_labels: frozenset[str]
    split_params: tuple[int, int] | None
    results: tuple[Surface, ...]

    @property
    def labels_text(self) -> str:
        return "".join(sorted(self.case_labels))

    @property
    def results_text(self) -> str:
        if len(self.results) == 1:
            return self.results[0].label
        return "(" + ", ".join(s.label for s in self.results) + ")"

    def result_key(self) -> tuple[tuple[int, int], ...]:
        """Canonical outcome key: sorted keys of the normalized results."""
        return tuple(sorted(s.canonical().sort_key() for s in self.results))

    def __str__(self) -> str:
        return f"{self.source.label} -> {self.results_text} [{self.labels_text}]"


def _raw_moves(surface: Surface) -> list[tuple[str, tuple[int, int] | None, tuple[Surface, ...]]]:
    g = surface.genus
    raw: list[tuple[str, tuple[int, int] | None, tuple[Surface, ...]]] = []
    if g == 0:
        return raw
    if surface.orientable:
        raw.append(("a", None, (Surface(ORIENTABLE, g - 1),)))
        for a in range(1, g // 2 + 1):
            raw.append(("b", (a, g - a), (Surface(ORIENTABLE, a), Surface(ORIENTABLE, g - a))))
        return raw
    raw.append(("c", None, (Surface(NONORIENTABLE, g - 1),)))
    if (g - 1) % 2 == 0:
        raw.append(("d", None, (Surface(ORIENTABLE, (g - 1) // 2),)))
    if g >= 2:
        raw.append(("e", None, (Surface(NONORIENTABLE, g - 2),)))
        if (g - 2) % 2 == 0:
            raw.append(("f", None, (Surface(ORIENTABLE, (g - 2) // 2),)))
    for a in range(1, g // 2 + 1):
        raw.append(("g", (a, g - a), (Surface(NONORIENTABLE, a), Surface(NONORIENTABLE, g - a))))
    for a in range(2, g, 2):
        raw.append(("h", (a, g - a), (Surface(ORIENTABLE, a // 2), Surface(NONORIENTABLE, g - a))))
    return raw


def surface_moves(surface: Surface) -> tuple[Move, ...]:
    """All distinct moves from ``surface`` in canonical order.

    Canonical order is by result count, then by the canonical result
    multiset.  The sphere has no moves.
    """
    source = surface.canonical()
    merged: dict[tuple, list] = {}
    for label, params, results in _raw_moves(source):
        key = tuple(sorted(s.canonical().sort_key() for s in results))
        entry = merged.get(key)
        if entry is None:
            merged[key] = [{label}, params, results]
        else:
            entry[0].add(label)
    out = [
        Move(source=source, case_labels=frozenset(labels), split_params=params, results=results)
        for labels, params, results in merged.values()
    ]
    out.sort(key=lambda m: (len(m.results), m.result_key()))
    return tuple(out)


@dataclass(frozen=True)
class PositionMove:
    """A move applied to one component of a position.

    ``after`` is the canonical position left behind: the source component
    replaced by the move's results, spheres dropped.
    """

    component: Surface
    move: Move
    after: Position

    def __str__(self) -> str:
        return f"{self.component.label} -> {self.move.results_text} leaving {self.after}"


def position_moves(position: Position) -> tuple[PositionMove, ...]:
    """All distinct moves from ``position``, deduplicated by outcome.

    Ordered by component (canonical order), then by that component's move
    order; when two different moves reach the same position only the first
    is kept.
    """
    out: list[PositionMove] = []
    seen: set[Position] = set()
    for component in position.distinct():
        rest = position.without_one(component)
        for move in surface_moves(component):
            after = make_position(rest + move.results)
            if after in seen:
                continue
            seen.add(after)
            out.append(PositionMove(component=component, move=move, after=after))
    return tuple(out)
