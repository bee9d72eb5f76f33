"""Command-line front end.

Commands:
  value POSITION     Grundy value of a position (json: value + components)
  moves POSITION     legal moves in canonical order, numbered from 1
  best POSITION      advised move, or a note that the position is lost
  table              per-genus move/value table (text, markdown, csv, json)
  verify             brute-force series vs closed forms; exit 1 on mismatch
  play POSITION      interactive game against the engine on stdin/stdout
  serve              run the HTTP service

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .moves import position_moves
from .serialize import analysis_json, position_json, position_move_json
from .surfaces import Position, PositionParseError, format_position, parse_position

TABLE_RENDERERS = {
    "text": analysis.render_table_text,
    "markdown": analysis.render_table_markdown,
    "csv": analysis.render_table_csv,
}


def _parse_or_fail(text: str) -> Position:
    try:
        return parse_position(text)
    except PositionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_value(args: argparse.Namespace) -> int:
    position = _parse_or_fail(args.position)
    if args.format == "json":
        payload = {
            "position": position_json(position),
            "grundy": analysis.grundy_position(position),
            "component_values": [
                {"surface": {"kind": s.kind, "genus": s.genus}, "value": analysis.grundy_surface_closed(s)}
                for s in position
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(analysis.grundy_position(position))
    return 0


def _cmd_moves(args: argparse.Namespace) -> int:
    position = _parse_or_fail(args.position)
    moves = position_moves(position)
    if args.format == "json":
        print(json.dumps([{"index": i, **position_move_json(m)} for i, m in enumerate(moves)], indent=2))
        return 0
    if not moves:
        print("no moves: the position is empty")
        return 0
    for i, move in enumerate(moves, start=1):
        value = analysis.grundy_position(move.after)
        print(
            f"{i:>3}) {move.component.label} -> {move.move.results_text:<12}"
            f" leaving {format_position(move.after)} (value {value})"
        )
    return 0


def _cmd_best(args: argparse.Namespace) -> int:
    position = _parse_or_fail(args.position)
    if args.format == "json":
        print(json.dumps(analysis_json(position), indent=2))
        return 0
    value = analysis.grundy_position(position)
    best = analysis.winning_move(position)
    if best is None:
        print(f"value 0: no winning move from {format_position(position)}")
    else:
        print(
            f"value {value}: play {best.component.label} -> {best.move.results_text},"
            f" leaving {format_position(best.after)}"
        )
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max_genus < 0:
        print("error: --max-genus must be >= 0", file=sys.stderr)
        return 2
    rows = analysis.value_table(args.max_genus)
    if args.format == "json":
        text = json.dumps(analysis.table_rows_json(rows), indent=2)
    else:
        text = TABLE_RENDERERS[args.format](rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_genus < 0:
        print("error: --max-genus must be >= 0", file=sys.stderr)
        return 2
    kinds = ["o", "n"] if args.kind == "both" else [args.kind]
    failed = False
    for kind in kinds:
        report = analysis.verify_series(kind, args.max_genus)
        if report.ok:
            print(f"{kind}: genus 0..{args.max_genus} brute force matches closed form")
        else:
            failed = True
            print(f"{kind}: MISMATCH at genus {', '.join(map(str, report.mismatches))}")
            for g in report.mismatches[:10]:
                print(f"  genus {g}: brute {report.brute[g]} closed {report.closed[g]}")
    return 1 if failed else 0


def _cmd_play(args: argparse.Namespace) -> int:
    position = _parse_or_fail(args.position)
    if position.is_empty:
        print("nothing to play: the position is empty")
        return 0
    if args.engine_first:
        reply = analysis.engine_move(position)
        print(f"engine: {reply.component.label} -> {reply.move.results_text}")
        position = reply.after
    while not position.is_empty:
        moves = position_moves(position)
        print(f"\nposition: {format_position(position)}")
        for i, move in enumerate(moves, start=1):
            print(f"{i:>3}) {move.component.label} -> {move.move.results_text:<12} leaving {format_position(move.after)}")
        try:
            raw = input("your move (number, q quits): ").strip()
        except EOFError:
            print("\nbye")
            return 0
        if raw.lower() in ("q", "quit"):
            print("bye")
            return 0
        try:
            choice = int(raw)
        except ValueError:
            print(f"not a move number: {raw!r}")
            continue
        if not 1 <= choice <= len(moves):
            print(f"move number out of range 1..{len(moves)}")
            continue
        position = moves[choice - 1].after
        if position.is_empty:
            print("you made the last move. you win!")
            return 0
        reply = analysis.engine_move(position)
        print(f"engine: {reply.component.label} -> {reply.move.results_text}")
        position = reply.after
    print("engine made the last move. engine wins.")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(
        host=args.host,
        port=args.port,
        snapshot_path=args.snapshot,
        static_dir=args.static,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decompgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="Grundy value of a position")
    p_value.add_argument("position")
    p_value.add_argument("--format", choices=["text", "json"], default="text")
    p_value.set_defaults(func=_cmd_value)

    p_moves = sub.add_parser("moves", help="legal moves from a position")
    p_moves.add_argument("position")
    p_moves.add_argument("--format", choices=["text", "json"], default="text")
    p_moves.set_defaults(func=_cmd_moves)

    p_best = sub.add_parser("best", help="advised move from a position")
    p_best.add_argument("position")
    p_best.add_argument("--format", choices=["text", "json"], default="text")
    p_best.set_defaults(func=_cmd_best)

    p_table = sub.add_parser("table", help="move/value table for n0..nMAX")
    p_table.add_argument("--max-genus", type=int, default=14)
    p_table.add_argument("--format", choices=["text", "markdown", "csv", "json"], default="text")
    p_table.add_argument("--output", help="write to a file instead of stdout")
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="check closed forms against brute force")
    p_verify.add_argument("--kind", choices=["o", "n", "both"], default="both")
    p_verify.add_argument("--max-genus", type=int, default=200)
    p_verify.set_defaults(func=_cmd_verify)

    p_play = sub.add_parser("play", help="play against the engine")
    p_play.add_argument("position")
    p_play.add_argument("--engine-first", action="store_true")
    p_play.set_defaults(func=_cmd_play)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--snapshot", help="JSONL file for session persistence")
    p_serve.add_argument("--static", help="directory of web UI files to serve")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def console_main() -> None:
    sys.exit(main())
