"""HTTP/JSON API for analysis queries and human-vs-engine play sessions.

Endpoints:
  POST /sessions                  start a session ({"position", "engine_first"?}), 201
  GET  /sessions/{id}             current session state
  GET  /sessions/{id}/moves       legal moves in canonical order
  POST /sessions/{id}/moves       play the human move ({"index"} or {"after"});
                                  the engine replies in the same request
  GET  /analysis?position=TEXT    value, advised move, per-component values

Every error response has the body ``{"error": "<message>"}``: 400 for parse
errors and empty starting positions, 404 for unknown sessions, 409 when it
is not the human's turn or the game is over, 422 for illegal moves.

Sessions live in memory; pass ``snapshot_path`` to also append every state
change to a JSON-lines file and restore the sessions on startup.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import Body, FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .analysis import engine_move
from .moves import PositionMove, position_moves
from .serialize import analysis_json, position_json, position_move_json
from .surfaces import Position, PositionParseError, format_position, parse_position

HUMAN = "human"
ENGINE = "engine"


class ApiError(Exception):
    """Service-level failure carrying its HTTP status."""

    def __init__(self, status_code: int, message: str):
        super().__init__(message)
        self.status_code = status_code
        self.message = message


def _bad_request(message: str) -> ApiError:
    return ApiError(400, message)


def _not_found(message: str) -> ApiError:
    return ApiError(404, message)


def _conflict(message: str) -> ApiError:
    return ApiError(409, message)


def _illegal(message: str) -> ApiError:
    return ApiError(422, message)


@dataclass
class Session:
    """One human-vs-engine game; mutated only under its store lock."""

    id: str
    initial_text: str
    engine_first: bool
    position: Position
    history: list[tuple[str, PositionMove]] = field(default_factory=list)

    def player_for(self, turn_index: int) -> str:
        first = ENGINE if self.engine_first else HUMAN
        second = HUMAN if self.engine_first else ENGINE
        return first if turn_index % 2 == 0 else second

    @property
    def over(self) -> bool:
        return self.position.is_empty

    @property
    def winner(self) -> str | None:
        if not self.over:
            return None
        return self.history[-1][0]  # last player to move wins

    @property
    def status(self) -> str:
        if not self.over:
            return "in_progress"
        return f"{self.winner}_won"

    @property
    def to_move(self) -> str | None:
        if self.over:
            return None
        return self.player_for(len(self.history))


def session_json(session: Session) -> dict:
    return {
        "id": session.id,
        "initial_position": session.initial_text,
        "engine_first": session.engine_first,
        "position": position_json(session.position),
        "to_move": session.to_move,
        "status": session.status,
        "winner": session.winner,
        "history": [
            {"player": player, "move": position_move_json(move)}
            for player, move in session.history
        ],
    }


class SessionStore:
    """In-memory sessions with per-session locks and optional JSONL snapshots."""

    def __init__(self, snapshot_path: str | Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._snapshot_path = Path(snapshot_path) if snapshot_path else None
        self._snapshot_lock = threading.Lock()
        if self._snapshot_path is not None and self._snapshot_path.exists():
            self._restore()

    # -- public operations ------------------------------------------------

    def create(self, position_text: str, engine_first: bool) -> Session:
        try:
            position = parse_position(position_text)
        except PositionParseError as exc:
            raise _bad_request(f"bad position: {exc}") from exc
        if position.is_empty:
            raise _bad_request("starting position is empty")
        session = Session(
            id=secrets.token_hex(8),
            initial_text=format_position(position),
            engine_first=engine_first,
            position=position,
        )
        if engine_first:
            self._apply_engine_reply(session)
        with self._registry_lock:
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise _not_found(f"no session {session_id!r}")
        return session

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            lock = self._locks.get(session_id)
        if lock is None:
            raise _not_found(f"no session {session_id!r}")
        return lock

    def legal_moves(self, session_id: str) -> tuple[PositionMove, ...]:
        return position_moves(self.get(session_id).position)

    def play(self, session_id: str, *, index: int | None, after_text: str | None) -> Session:
        """Apply the human move, then the engine's reply; atomic on failure."""
        lock = self.lock_for(session_id)
        with lock:
            session = self.get(session_id)
            if session.over:
                raise _conflict("the game is already over")
            if session.to_move != HUMAN:
                raise _conflict("it is not the human's turn")
            move = self._resolve_move(session.position, index, after_text)
            entries: list[tuple[str, PositionMove]] = [(HUMAN, move)]
            position = move.after
            if not position.is_empty:
                reply = engine_move(position)
                entries.append((ENGINE, reply))
                position = reply.after
            # everything computed; commit in one go
            session.history.extend(entries)
            session.position = position
        self._snapshot(session)
        return session

    # -- internals ---------------------------------------------------------

    @staticmethod
    def _resolve_move(
        position: Position, index: int | None, after_text: str | None
    ) -> PositionMove:
        moves = position_moves(position)
        if (index is None) == (after_text is None):
            raise _illegal("provide exactly one of 'index' or 'after'")
        if index is not None:
            if not isinstance(index, int) or isinstance(index, bool):
                raise _illegal("'index' must be an integer")
            if not 0 <= index < len(moves):
                raise _illegal(f"move index {index} out of range 0..{len(moves) - 1}")
            return moves[index]
        try:
            target = parse_position(after_text)
        except PositionParseError as exc:
            raise _illegal(f"bad 'after' position: {exc}") from exc
        for move in moves:
            if move.after == target:
                return move
        raise _illegal(f"no legal move reaches {format_position(target)}")

    @staticmethod
    def _apply_engine_reply(session: Session) -> None:
        # only called on nonempty positions, which always have a move
        reply = engine_move(session.position)
        session.history.append((ENGINE, reply))
        session.position = reply.after

    # -- snapshots -----------------------------------------------------------

    def _snapshot(self, session: Session) -> None:
        if self._snapshot_path is None:
            return
        record = {
            "id": session.id,
            "initial": session.initial_text,
            "engine_first": session.engine_first,
            "history": [
                {"player": player, "after": format_position(move.after)}
                for player, move in session.history
            ],
        }
        line = json.dumps(record)
        with self._snapshot_lock:
            with self._snapshot_path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")

    def _restore(self) -> None:
        latest: dict[str, dict] = {}
        with self._snapshot_path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    record = json.loads(line)
                    latest[record["id"]] = record
        for record in latest.values():
            session = self._replay(record)
            self._sessions[session.id] = session
            self._locks[session.id] = threading.Lock()

    @staticmethod
    def _replay(record: dict) -> Session:
        position = parse_position(record["initial"])
        session = Session(
            id=record["id"],
            initial_text=record["initial"],
            engine_first=record["engine_first"],
            position=position,
        )
        for item in record["history"]:
            target = parse_position(item["after"])
            # a move is pinned down by its outcome: position_moves dedups by it
            found = next(
                (m for m in position_moves(session.position) if m.after == target), None
            )
            if found is None:
                raise ValueError(
                    f"snapshot for session {record['id']!r} replays an illegal move"
                )
            session.history.append((item["player"], found))
            session.position = found.after
        return session


def create_app(
    store: SessionStore | None = None,
    *,
    snapshot_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the FastAPI app; handlers are sync and rely on store locks."""
    app = FastAPI(title="decompgame service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore(snapshot_path=snapshot_path)

    @app.exception_handler(ApiError)
    def _api_error(_request, exc: ApiError):
        return JSONResponse(status_code=exc.status_code, content={"error": exc.message})

    @app.exception_handler(RequestValidationError)
    def _validation_error(_request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "malformed request body"})

    @app.exception_handler(StarletteHTTPException)
    def _http_error(_request, exc: StarletteHTTPException):
        return JSONResponse(status_code=exc.status_code, content={"error": str(exc.detail)})

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        position_text = payload.get("position")
        if not isinstance(position_text, str):
            raise _bad_request("body must carry a string 'position'")
        engine_first = payload.get("engine_first", False)
        if not isinstance(engine_first, bool):
            raise _bad_request("'engine_first' must be a boolean")
        return session_json(sessions.create(position_text, engine_first))

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return session_json(sessions.get(session_id))

    @app.get("/sessions/{session_id}/moves")
    def get_moves(session_id: str):
        moves = sessions.legal_moves(session_id)
        return {
            "moves": [
                {"index": i, **position_move_json(m)} for i, m in enumerate(moves)
            ]
        }

    @app.post("/sessions/{session_id}/moves")
    def play_move(session_id: str, payload: dict = Body(...)):
        index = payload.get("index")
        after_text = payload.get("after")
        if after_text is not None and not isinstance(after_text, str):
            raise _illegal("'after' must be a string")
        session = sessions.play(session_id, index=index, after_text=after_text)
        return session_json(session)

    @app.get("/analysis")
    def analyze(position: str | None = None):
        if position is None:
            raise _bad_request("missing 'position' query parameter")
        try:
            parsed = parse_position(position)
        except PositionParseError as exc:
            raise _bad_request(f"bad position: {exc}") from exc
        return analysis_json(parsed)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def serve(
    host: str = "127.0.0.1",
    port: int = 8000,
    *,
    snapshot_path: str | Path | None = None,
    static_dir: str | Path | None = None,
) -> None:
    """Run the service under uvicorn (blocks)."""
    import uvicorn

    app = create_app(snapshot_path=snapshot_path, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
