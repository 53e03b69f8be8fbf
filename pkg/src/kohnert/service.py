"""HTTP/JSON session API for interactive puzzle play.

One session = one board. The client applies moves one row at a time; the
server enforces legality (only nontrivial moves), tracks history for undo,
and reports live rows, minimality, and the remaining max/min move budgets
recomputed from the current board on every response. Sessions live in
memory; requests to the same session are serialized by a per-session lock.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from contextlib import asynccontextmanager
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .diagram import (
    Diagram,
    MoveRecord,
    apply_chain,
    is_minimal,
    kohnert_move,
    movable_rows,
    random_diagram,
    render_grid,
)
from .formulas import max_moves, min_moves
from .solvers import solve_min

DEFAULT_PORT = 8071


@dataclass
class PuzzleSession:
    id: str
    mode: str
    initial: Diagram
    current: Diagram
    target: int
    history: list[MoveRecord] = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _record_json(record: MoveRecord) -> dict:
    return {
        "row": record.row,
        "source": [record.source.row, record.source.col],
        "target": [record.target.row, record.target.col],
    }


def _state(session: PuzzleSession) -> dict:
    current = session.current
    return {
        "id": session.id,
        "mode": session.mode,
        "cells": [[r, c] for r, c in current.cells],
        "grid": render_grid(current),
        "initial_cells": [[r, c] for r, c in session.initial.cells],
        "target": session.target,
        "moves_used": len(session.history),
        "history": [_record_json(m) for m in session.history],
        "live_rows": movable_rows(current),
        "is_minimal": is_minimal(current),
        "remaining_max": max_moves(current),
        "remaining_min": min_moves(current),
        "created": session.created,
        "updated": session.updated,
    }


def _bad_request(reason: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"error": "invalid_request", "reason": reason})


def _parse_cells(raw: object) -> Diagram:
    if not isinstance(raw, list):
        raise _bad_request("cells must be a list of [row, col] pairs")
    cells = []
    seen = set()
    for entry in raw:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)
        ):
            raise _bad_request(f"bad cell entry: {entry!r}")
        row, col = entry
        if row < 1 or col < 1:
            raise _bad_request(f"cell ({row}, {col}) outside the first quadrant")
        if (row, col) in seen:
            raise _bad_request(f"duplicate cell ({row}, {col})")
        seen.add((row, col))
        cells.append((row, col))
    return Diagram(cells)


def _parse_random_spec(raw: object) -> tuple[int, int, float, int]:
    if not isinstance(raw, dict):
        raise _bad_request("random must be an object")
    try:
        rows, cols = int(raw["rows"]), int(raw["cols"])
        density, seed = float(raw["density"]), int(raw["seed"])
    except (KeyError, TypeError, ValueError):
        raise _bad_request("random needs integer rows/cols/seed and numeric density") from None
    if rows < 0 or cols < 0 or not 0.0 <= density <= 1.0:
        raise _bad_request("random spec out of range")
    return rows, cols, density, seed


def create_app(
    *,
    max_cells: int = 500,
    allowed_origins: tuple[str, ...] = ("*",),
    snapshot_path: str | None = None,
) -> FastAPI:
    """Build the service; state is scoped to the returned app."""
    sessions: dict[str, PuzzleSession] = {}
    store_lock = threading.Lock()

    def write_snapshot() -> None:
        with store_lock:
            dump = [
                {
                    "id": s.id,
                    "mode": s.mode,
                    "initial_cells": [[r, c] for r, c in s.initial.cells],
                    "rows": [m.row for m in s.history],
                    "created": s.created,
                    "updated": s.updated,
                }
                for s in sessions.values()
            ]
        with open(snapshot_path, "w", encoding="utf-8") as fh:
            json.dump({"sessions": dump}, fh, indent=2)

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        yield
        if snapshot_path is not None:
            write_snapshot()

    app = FastAPI(title="kohnert puzzle service", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(allowed_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def get_session(session_id: str) -> PuzzleSession:
        with store_lock:
            session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail={"error": "unknown_session"})
        return session

    @app.post("/sessions")
    def create_session(payload: dict = Body(...)):
        mode = payload.get("mode")
        if mode not in ("max", "min"):
            raise _bad_request("mode must be 'max' or 'min'")
        has_cells = "cells" in payload
        has_random = "random" in payload
        if has_cells == has_random:
            raise _bad_request("provide exactly one of cells or random")
        if has_cells:
            diagram = _parse_cells(payload["cells"])
        else:
            rows, cols, density, seed = _parse_random_spec(payload["random"])
            if rows * cols > 4 * max_cells:
                raise HTTPException(
                    status_code=413,
                    detail={"error": "too_many_cells", "limit": max_cells},
                )
            diagram = random_diagram(rows, cols, density, seed)
        if len(diagram) > max_cells:
            raise HTTPException(
                status_code=413, detail={"error": "too_many_cells", "limit": max_cells}
            )
        target = max_moves(diagram) if mode == "max" else min_moves(diagram)
        session = PuzzleSession(
            id=secrets.token_urlsafe(16),
            mode=mode,
            initial=diagram,
            current=diagram,
            target=target,
        )
        with store_lock:
            sessions[session.id] = session
        with session.lock:
            return _state(session)

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        session = get_session(session_id)
        with session.lock:
            return _state(session)

    @app.post("/sessions/{session_id}/moves")
    def apply_move(session_id: str, payload: dict = Body(...)):
        row = payload.get("row")
        if not isinstance(row, int) or isinstance(row, bool) or row < 1:
            raise _bad_request("row must be a positive integer")
        session = get_session(session_id)
        with session.lock:
            moved, record = kohnert_move(session.current, row)
            if record.trivial:
                raise HTTPException(
                    status_code=409, detail={"error": "trivial_move", "row": row}
                )
            session.current = moved
            session.history.append(record)
            session.updated = time.time()
            return {**_state(session), "move": _record_json(record)}

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail={"error": "empty_history"})
            session.history.pop()
            replay = apply_chain(session.initial, [m.row for m in session.history])
            session.current = replay.end
            session.updated = time.time()
            return _state(session)

    @app.get("/sessions/{session_id}/hint")
    def hint(session_id: str):
        session = get_session(session_id)
        with session.lock:
            current = session.current
            if is_minimal(current):
                return {"optimal_row": None}
            if session.mode == "max":
                return {"optimal_row": movable_rows(current)[0]}
            return {"optimal_row": solve_min(current).chain.rows[0]}

    return app


def serve(port: int = DEFAULT_PORT, host: str = "127.0.0.1") -> None:
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port)
