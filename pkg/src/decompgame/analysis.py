"""Game analysis: Grundy values, winning strategy, lengths, value table.

Single-surface values follow short periodic series, and a position's value
is the nim sum of its components' values.  Everything here is computed at
least twice along independent routes so the fast paths stay checkable:

* ``grundy_surface_closed``: the periodic closed forms.
* ``grundy_surface_brute``: mex/nim-sum DP over all moves (kernels module).
* ``grundy_position_oracle``: generic game-graph evaluation over whole
  positions, never using nim additivity.

``verify_series`` compares the first two; the tests compare all three.
"""

from __future__ import annotations

import csv
import io
import threading
from dataclasses import dataclass

import numpy as np

from . import kernels
from .moves import PositionMove, position_moves, surface_moves
from .sg import grundy_eval, mex, nim_sum
from .surfaces import NONORIENTABLE, ORIENTABLE, Position, Surface, format_position

BRUTE_GENUS_CAP = 512
ORACLE_GENUS_CAP = 12


class GenusCapError(ValueError):
    """Computation refused: genus beyond the configured cap."""


def grundy_surface_closed(surface: Surface) -> int:
    """Grundy value of a single surface from the periodic closed forms.

    Orientable: 0, 1, then 2, 0 repeating.  Nonorientable: 0, 1, 2, then
    4, 6, 0, 3 repeating.
    """
    s = surface.canonical()
    g = s.genus
    if s.orientable:
        if g <= 1:
            return g
        return 2 if g % 2 == 0 else 0
    if g <= 2:
        return g
    return (4, 6, 0, 3)[(g - 3) % 4]


# ---------------------------------------------------------------------------
# Brute-force series, cached per kind

_cache_lock = threading.Lock()
_value_cache: dict[str, np.ndarray] = {}
_length_cache: dict[str, tuple[np.ndarray, np.ndarray]] = {}


def clear_caches() -> None:
    """Drop memoized series (mainly for timing tests)."""
    with _cache_lock:
        _value_cache.clear()
        _length_cache.clear()


def _grown_limit(current: int, needed: int) -> int:
    return max(needed, 2 * current, 64)


def _value_series(kind: str, genus: int) -> np.ndarray:
    with _cache_lock:
        arr = _value_cache.get(kind)
        if arr is None or arr.size <= genus:
            limit = _grown_limit(arr.size - 1 if arr is not None else 0, genus)
            if kind == ORIENTABLE:
                arr = kernels.orientable_values(limit)
            else:
                arr = kernels.nonorientable_values(limit)
            _value_cache[kind] = arr
        return arr


def _length_series(kind: str, genus: int) -> tuple[np.ndarray, np.ndarray]:
    with _cache_lock:
        pair = _length_cache.get(kind)
        if pair is None or pair[0].size <= genus:
            limit = _grown_limit(pair[0].size - 1 if pair is not None else 0, genus)
            if kind == ORIENTABLE:
                pair = kernels.orientable_lengths(limit)
            else:
                pair = kernels.nonorientable_lengths(limit)
            _length_cache[kind] = pair
        return pair


def _check_genus_cap(genus: int, cap: int) -> None:
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    if genus > cap:
        raise GenusCapError(f"genus {genus} exceeds the cap of {cap}")


def grundy_surface_brute(surface: Surface, *, cap: int = BRUTE_GENUS_CAP) -> int:
    """Grundy value of a single surface by brute-force DP over all moves."""
    s = surface.canonical()
    _check_genus_cap(s.genus, cap)
    return int(_value_series(s.kind, s.genus)[s.genus])


def grundy_position(position: Position) -> int:
    """Grundy value of a position: nim sum of its components' closed values."""
    return nim_sum(grundy_surface_closed(s) for s in position)


def _position_successors(position: Position):
    return tuple((pm.after,) for pm in position_moves(position))


def grundy_position_oracle(
    position: Position,
    *,
    memo: dict | None = None,
    genus_cap: int = ORACLE_GENUS_CAP,
) -> int:
    """Grundy value of a position by generic game-graph evaluation.

    Walks the actual move graph over whole positions, so it is independent
    of nim additivity and of the closed forms; exponential-ish in genus,
    hence the cap.  Pass a shared ``memo`` to amortize across calls.
    """
    _check_genus_cap(position.total_genus, genus_cap)
    return grundy_eval(position, _position_successors, memo=memo)


def winning_move(position: Position) -> PositionMove | None:
    """A move to a value-0 position, or None when the position's value is 0.

    Ties broken by smallest resulting total genus, then fewest components,
    then lexicographically least position text.
    """
    if grundy_position(position) == 0:
        return None
    zeros = [pm for pm in position_moves(position) if grundy_position(pm.after) == 0]
    if not zeros:
        raise AssertionError(f"no value-0 successor from {position} despite value > 0")
    return min(
        zeros,
        key=lambda pm: (pm.after.total_genus, len(pm.after), format_position(pm.after)),
    )


def engine_move(position: Position) -> PositionMove | None:
    """The engine's reply: the winning move if one exists, else the first
    legal move in canonical order, else None (no moves at all)."""
    best = winning_move(position)
    if best is not None:
        return best
    moves = position_moves(position)
    return moves[0] if moves else None


# ---------------------------------------------------------------------------
# Length bounds


@dataclass(frozen=True)
class LengthBounds:
    shortest: int
    longest: int


def length_bounds(surface: Surface, *, cap: int = BRUTE_GENUS_CAP) -> LengthBounds:
    """Exact shortest and longest possible game lengths from one surface."""
    s = surface.canonical()
    _check_genus_cap(s.genus, cap)
    short, long_ = _length_series(s.kind, s.genus)
    return LengthBounds(int(short[s.genus]), int(long_[s.genus]))


# ---------------------------------------------------------------------------
# Series verification


@dataclass(frozen=True)
class GrundyReport:
    """Brute-force vs closed-form comparison over one kind's series."""

    kind: str
    max_genus: int
    brute: tuple[int, ...]
    closed: tuple[int, ...]
    mismatches: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_series(kind: str, max_genus: int, *, cap: int = BRUTE_GENUS_CAP) -> GrundyReport:
    """Check brute-force values against the closed forms for genus 0..max."""
    if kind not in (ORIENTABLE, NONORIENTABLE):
        raise ValueError(f"unknown surface kind {kind!r}, expected 'o' or 'n'")
    _check_genus_cap(max_genus, cap)
    series = _value_series(kind, max_genus)
    brute = tuple(int(v) for v in series[: max_genus + 1])
    closed = tuple(grundy_surface_closed(Surface(kind, g)) for g in range(max_genus + 1))
    mismatches = tuple(g for g in range(max_genus + 1) if brute[g] != closed[g])
    return GrundyReport(kind=kind, max_genus=max_genus, brute=brute, closed=closed, mismatches=mismatches)


# ---------------------------------------------------------------------------
# Reference value table for nonorientable genus rows


@dataclass(frozen=True)
class ValueTableRow:
    """One table row: every move from n<genus> with its outcome's value.

    ``entries`` pair each move's raw results with the nim sum of the
    results' Grundy values; ``value`` is the mex over the entries (0 for
    the moveless genus-0 row).
    """

    genus: int
    entries: tuple[tuple[tuple[Surface, ...], int], ...]
    value: int

    def entry_texts(self) -> tuple[str, ...]:
        return tuple(
            f"{_results_text(results)}={value}" for results, value in self.entries
        )


def _results_text(results: tuple[Surface, ...]) -> str:
    if len(results) == 1:
        return results[0].label
    return "(" + ", ".join(s.label for s in results) + ")"


def value_table(max_genus: int, *, cap: int = BRUTE_GENUS_CAP) -> list[ValueTableRow]:
    """Rows for n0..n<max_genus>: each move's outcome value, and the row mex."""
    _check_genus_cap(max_genus, cap)
    rows: list[ValueTableRow] = []
    for g in range(max_genus + 1):
        entries = []
        for move in surface_moves(Surface(NONORIENTABLE, g)):
            value = nim_sum(
                grundy_surface_brute(r.canonical(), cap=cap) for r in move.results
            )
            entries.append((move.results, value))
        rows.append(
            ValueTableRow(
                genus=g,
                entries=tuple(entries),
                value=mex(v for _, v in entries),
            )
        )
    return rows


def render_table_text(rows: list[ValueTableRow]) -> str:
    lines = ["genus  value  moves (result=value)"]
    for row in rows:
        entries = "; ".join(row.entry_texts()) or "-"
        lines.append(f"{row.genus:>5}  {row.value:>5}  {entries}")
    return "\n".join(lines)


def render_table_markdown(rows: list[ValueTableRow]) -> str:
    lines = ["| genus | moves (result=value) | value |", "| --- | --- | --- |"]
    for row in rows:
        entries = "; ".join(row.entry_texts()) or "-"
        lines.append(f"| {row.genus} | {entries} | {row.value} |")
    return "\n".join(lines)


def render_table_csv(rows: list[ValueTableRow]) -> str:
    """One line per (row, entry); moveless rows keep one line with blanks."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["genus", "entry", "entry_value", "row_value"])
    for row in rows:
        if not row.entries:
            writer.writerow([row.genus, "", "", row.value])
        for results, value in row.entries:
            writer.writerow([row.genus, _results_text(results), value, row.value])
    return buf.getvalue()


def table_rows_json(rows: list[ValueTableRow]) -> list[dict]:
    return [
        {
            "genus": row.genus,
            "value": row.value,
            "entries": [
                {"results": [s.label for s in results], "value": value}
                for results, value in row.entries
            ],
        }
        for row in rows
    ]
