"""Two-player surface decomposition game: engine, analysis, CLI, HTTP service.

Positions are multisets of compact surfaces written ``o<g>`` (orientable,
genus g) and ``n<g>`` (nonorientable).  A move decomposes one component;
the last player able to move wins.  See the README for the move rules and
the command-line and HTTP interfaces.
"""

from .analysis import (
    BRUTE_GENUS_CAP,
    ORACLE_GENUS_CAP,
    GenusCapError,
    GrundyReport,
    LengthBounds,
    ValueTableRow,
    engine_move,
    grundy_position,
    grundy_position_oracle,
    grundy_surface_brute,
    grundy_surface_closed,
    length_bounds,
    value_table,
    verify_series,
    winning_move,
)
from .moves import Move, PositionMove, position_moves, surface_moves
from .sg import (
    StateLimitError,
    grundy_eval,
    mex,
    nim_state,
    nim_sum,
    nim_winning_move,
    octal43_grundy,
    octal43_heaps_grundy,
)
from .surfaces import (
    EMPTY,
    SPHERE,
    Position,
    PositionParseError,
    Surface,
    connected_sum,
    format_position,
    make_position,
    make_surface,
    parse_position,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_GENUS_CAP",
    "EMPTY",
    "GenusCapError",
    "GrundyReport",
    "LengthBounds",
    "Move",
    "ORACLE_GENUS_CAP",
    "Position",
    "PositionMove",
    "PositionParseError",
    "SPHERE",
    "StateLimitError",
    "Surface",
    "ValueTableRow",
    "connected_sum",
    "engine_move",
    "format_position",
    "grundy_eval",
    "grundy_position",
    "grundy_position_oracle",
    "grundy_surface_brute",
    "grundy_surface_closed",
    "length_bounds",
    "make_position",
    "make_surface",
    "mex",
    "nim_state",
    "nim_sum",
    "nim_winning_move",
    "octal43_grundy",
    "octal43_heaps_grundy",
    "parse_position",
    "position_moves",
    "surface_moves",
    "value_table",
    "verify_series",
    "winning_move",
    "__version__",
]
