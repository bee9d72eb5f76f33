"""Surfaces at the level of their classification, and multiset positions of them.

A compact surface is identified by its orientability kind and genus:
``o<g>`` is the connected sum of g tori (``o0`` is the sphere), ``n<g>`` the
connected sum of g projective planes.  The sphere is orientable, so ``n0``
normalizes to ``o0``; raw ``Surface("n", 0)`` values are allowed only as
unnormalized move results, where the nonorientable spelling is kept for
display.

A :class:`Position` is a finite multiset of surfaces, stored canonically:
spheres dropped, orientable components first, genus ascending within kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

ORIENTABLE = "o"
NONORIENTABLE = "n"

_KIND_RANK = {ORIENTABLE: 0, NONORIENTABLE: 1}


@dataclass(frozen=True)
class Surface:
    """One compact surface as classification data.

    Instances are immutable and compare by value.  Use :func:`make_surface`
    to construct normalized surfaces from user input.
    """

    kind: str
    genus: int

    @property
    def label(self) -> str:
        return f"{self.kind}{self.genus}"

    @property
    def is_sphere(self) -> bool:
        return self.genus == 0

    @property
    def orientable(self) -> bool:
        return self.kind == ORIENTABLE

    def canonical(self) -> "Surface":
        # the genus-0 nonorientable spelling denotes the sphere
        if self.genus == 0 and self.kind == NONORIENTABLE:
            return SPHERE
        return self

    def sort_key(self) -> tuple[int, int]:
        return (_KIND_RANK[self.kind], self.genus)

    def __str__(self) -> str:
        return self.label


SPHERE = Surface(ORIENTABLE, 0)


def make_surface(kind: str, genus: int) -> Surface:
    """Build a normalized surface, validating kind and genus."""
    if kind not in _KIND_RANK:
        raise ValueError(f"unknown surface kind {kind!r}, expected 'o' or 'n'")
    if not isinstance(genus, int) or isinstance(genus, bool):
        raise TypeError(f"genus must be an int, got {type(genus).__name__}")
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    return Surface(kind, genus).canonical()


def connected_sum(first: Surface, second: Surface) -> Surface:
    """Connected sum on classification data.

    Genus adds within a kind; a nonorientable summand makes the result
    nonorientable, with each torus contributing two crosscaps.  The sphere
    is the identity.
    """
    a = first.canonical()
    b = second.canonical()
    if a.orientable and b.orientable:
        return Surface(ORIENTABLE, a.genus + b.genus)
    if a.orientable:
        return Surface(NONORIENTABLE, 2 * a.genus + b.genus)
    if b.orientable:
        return Surface(NONORIENTABLE, a.genus + 2 * b.genus)
    return Surface(NONORIENTABLE, a.genus + b.genus)


@dataclass(frozen=True)
class Position:
    """Canonical multiset of non-sphere surfaces.

    Construction canonicalizes: spheres are dropped (they admit no moves)
    and components are sorted orientable-first, genus ascending.
    """

    components: tuple[Surface, ...] = ()

    def __post_init__(self) -> None:
        canon = sorted(
            (s.canonical() for s in self.components if s.genus > 0),
            key=Surface.sort_key,
        )
        object.__setattr__(self, "components", tuple(canon))

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def total_genus(self) -> int:
        return sum(s.genus for s in self.components)

    def __iter__(self) -> Iterator[Surface]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def distinct(self) -> tuple[Surface, ...]:
        """Distinct components in canonical order."""
        return tuple(dict.fromkeys(self.components))

    def without_one(self, component: Surface) -> tuple[Surface, ...]:
        """Components minus one copy of ``component`` (which must be present)."""
        rest = list(self.components)
        rest.remove(component)
        return tuple(rest)

    def __str__(self) -> str:
        return format_position(self)


EMPTY = Position()


def make_position(surfaces: Iterable[Surface]) -> Position:
    """Canonical position holding the given surfaces (spheres are dropped)."""
    return Position(tuple(surfaces))


class PositionParseError(ValueError):
    """Malformed position text; ``offset`` is the character the parse failed at."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.message = message
        self.offset = offset


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def _scan_int(text: str, i: int) -> tuple[int, int] | None:
    j = i
    while j < len(text) and text[j].isdigit():
        j += 1
    if j == i:
        return None
    return int(text[i:j]), j


def _parse_surface(text: str, i: int) -> tuple[Surface, int]:
    if i >= len(text):
        raise PositionParseError("expected a surface", i)
    kind = text[i]
    if kind not in _KIND_RANK:
        raise PositionParseError(f"expected 'o' or 'n', got {text[i]!r}", i)
    scanned = _scan_int(text, i + 1)
    if scanned is None:
        raise PositionParseError(f"expected a genus after {kind!r}", i + 1)
    genus, j = scanned
    return make_surface(kind, genus), j


def parse_position(text: str) -> Position:
    """Parse position text.

    Grammar: ``position := "empty" | term ("+" term)*`` with
    ``term := [count "*"] surface``, ``surface := ("o" | "n") integer`` and
    ``count`` a positive integer.  Whitespace is free around tokens.
    Raises :class:`PositionParseError` with the failing offset otherwise.
    """
    i = _skip_ws(text, 0)
    if text.startswith("empty", i):
        j = _skip_ws(text, i + len("empty"))
        if j != len(text):
            raise PositionParseError("unexpected text after 'empty'", j)
        return EMPTY

    surfaces: list[Surface] = []
    while True:
        i = _skip_ws(text, i)
        count = 1
        scanned = _scan_int(text, i)
        if scanned is not None:
            value, j = scanned
            j = _skip_ws(text, j)
            if j >= len(text) or text[j] != "*":
                raise PositionParseError("expected '*' after a count", j)
            if value < 1:
                raise PositionParseError("count must be >= 1", i)
            count = value
            i = _skip_ws(text, j + 1)
        surface, i = _parse_surface(text, i)
        surfaces.extend([surface] * count)
        i = _skip_ws(text, i)
        if i == len(text):
            break
        if text[i] != "+":
            raise PositionParseError(f"expected '+' or end of input, got {text[i]!r}", i)
        i += 1
    return make_position(surfaces)


def format_position(position: Position) -> str:
    """Canonical text for a position; inverse of :func:`parse_position`.

    Repeated components use count syntax, e.g. ``2*n1+o3``.  The empty
    position renders as ``"empty"``.
    """
    if position.is_empty:
        return "empty"
    terms: list[str] = []
    run: Surface | None = None
    count = 0
    for s in (*position.components, None):
        if s == run:
            count += 1
            continue
        if run is not None:
            terms.append(run.label if count == 1 else f"{count}*{run.label}")
        run = s
        count = 1
    return "+".join(terms)
