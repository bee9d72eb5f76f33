"""JSON wire shapes shared by the CLI's json output and the HTTP service."""

from __future__ import annotations

from .analysis import grundy_position, grundy_surface_closed, winning_move
from .moves import PositionMove
from .surfaces import Position, Surface, format_position


def surface_json(surface: Surface) -> dict:
    return {"kind": surface.kind, "genus": surface.genus}


def position_json(position: Position) -> dict:
    return {
        "text": format_position(position),
        "components": [surface_json(s) for s in position],
        "total_genus": position.total_genus,
    }


def position_move_json(move: PositionMove) -> dict:
    """One applicable move; ``results`` keep their raw display spelling."""
    return {
        "component": surface_json(move.component),
        "cases": move.move.labels_text,
        "results": [surface_json(s) for s in move.move.results],
        "results_text": move.move.results_text,
        "after": position_json(move.after),
    }


def analysis_json(position: Position) -> dict:
    """Grundy value, the advised move (None when losing), per-component values."""
    best = winning_move(position)
    return {
        "position": position_json(position),
        "grundy": grundy_position(position),
        "winning_move": None if best is None else position_move_json(best),
        "component_values": [
            {"surface": surface_json(s), "value": grundy_surface_closed(s)}
            for s in position
        ],
    }
