"""HTTP analysis service backing the interactive board UI.

In-memory sessions; the engine plays the side the human did not take and
answers each human move synchronously.  All game logic stays here — the
UI is a thin client.  Loopback-only by default; sessions can optionally
be appended to a JSON-lines event log.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import AliasChoices, BaseModel, Field

from .graphs import Family, Graph, GraphSizeError, build_family, max_n_for
from .position import Player, Position, initial_position
from .solver import ResourceBudgetError, Solver


class CreateGameBody(BaseModel):
    family: str
    n: int
    human_player: str = Field(
        default="Right", validation_alias=AliasChoices("human_player", "human")
    )


class MoveBody(BaseModel):
    vertex: int


@dataclass
class GameSession:
    id: str
    graph: Graph
    family: Family
    n: int
    human: Player
    position: Position
    to_move: Player
    history: list[tuple[Player, int]] = field(default_factory=list)
    solver: Solver = None  # type: ignore[assignment]
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def engine(self) -> Player:
        return self.human.opponent()

    @property
    def game_over(self) -> bool:
        return not self.position.legal_moves(self.to_move)

    def replay_from_start(self) -> Position:
        pos = initial_position(self.graph)
        for player, v in self.history:
            pos = pos.apply_move(player, v)
        return pos

    def to_json(self) -> dict:
        over = self.game_over
        return {
            "id": self.id,
            "family": self.family.value,
            "n": self.n,
            "human_player": self.human.value,
            "engine_player": self.engine.value,
            "graph": self.graph.to_json(),
            "position": self.position.to_json(),
            "to_move": self.to_move.value,
            "history": [
                {"player": p.value, "vertex": v, "label": str(self.graph.label_of(v))}
                for p, v in self.history
            ],
            "legal_moves": self.position.legal_moves(self.to_move),
            "game_over": over,
            "winner": self.to_move.opponent().value if over else None,
        }


class SessionStore:
    def __init__(self, event_log: Path | None = None):
        self._sessions: dict[str, GameSession] = {}
        self._lock = threading.Lock()
        self._event_log = event_log

    def create(self, family: Family, n: int, human: Player) -> GameSession:
        graph = build_family(family, n)
        session = GameSession(
            id=secrets.token_hex(8),
            graph=graph,
            family=family,
            n=n,
            human=human,
            position=initial_position(graph),
            to_move=Player.LEFT,
            solver=Solver(graph),
        )
        with self._lock:
            self._sessions[session.id] = session
        self._log("create", session.id, family=family.value, n=n, human=human.value)
        return session

    def get(self, session_id: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown game {session_id}")
        return session

    def _log(self, event: str, session_id: str, **payload) -> None:
        if self._event_log is None:
            return
        record = {"ts": time.time(), "event": event, "session": session_id, **payload}
        with self._lock:
            with open(self._event_log, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")


def _engine_reply(session: GameSession) -> int | None:
    """Lowest-index winning move, else lowest-index legal move; None if stuck."""
    pos = session.position
    legal = pos.legal_moves(session.engine)
    if not legal:
        return None
    best = session.solver.best_moves(pos, session.engine)
    return best[0] if best else legal[0]


def _apply(session: GameSession, player: Player, vertex: int) -> None:
    session.position = session.position.apply_move(player, vertex)
    session.history.append((player, vertex))
    session.to_move = player.opponent()


def create_app(event_log: Path | None = None) -> FastAPI:
    app = FastAPI(title="snortlab analysis service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(event_log)
    app.state.store = store

    @app.get("/families")
    def families() -> list[dict]:
        return [
            {"family": fam.value, "rows": fam.rows, "min_n": 1, "max_n": max_n_for(fam)}
            for fam in Family
        ]

    @app.post("/games", status_code=201)
    def create_game(body: CreateGameBody) -> dict:
        try:
            family = Family(body.family.lower())
        except ValueError:
            raise HTTPException(422, detail=f"unknown family {body.family!r}")
        try:
            human = Player(body.human_player.capitalize())
        except ValueError:
            raise HTTPException(422, detail=f"unknown player {body.human_player!r}")
        try:
            session = store.create(family, body.n, human)
        except (GraphSizeError, ValueError) as exc:
            raise HTTPException(422, detail=str(exc))
        engine_move = None
        with session.lock:
            if session.to_move is session.engine and not session.game_over:
                engine_move = _engine_reply(session)
                if engine_move is not None:
                    _apply(session, session.engine, engine_move)
        store._log("engine_move", session.id, vertex=engine_move)
        out = session.to_json()
        out["engine_move"] = engine_move
        return out

    @app.get("/games/{session_id}")
    def get_game(session_id: str) -> dict:
        return store.get(session_id).to_json()

    @app.post("/games/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody) -> dict:
        session = store.get(session_id)
        with session.lock:
            if session.game_over:
                raise HTTPException(409, detail="game is over")
            if session.to_move is not session.human:
                raise HTTPException(409, detail="not the human side's turn")
            v = body.vertex
            if not 0 <= v < session.graph.num_vertices:
                raise HTTPException(409, detail=f"vertex {v} out of range")
            if not session.position.is_legal(session.human, v):
                bit = 1 << v
                reason = "dead" if not session.position.alive & bit else "opponent_tint"
                raise HTTPException(409, detail=f"illegal move at {v}: {reason}")
            _apply(session, session.human, v)
            engine_move = None
            if not session.game_over:
                engine_move = _engine_reply(session)
                if engine_move is not None:
                    _apply(session, session.engine, engine_move)
        store._log("move", session_id, human=v, engine=engine_move)
        out = session.to_json()
        out["human_move"] = v
        out["engine_move"] = engine_move
        return out

    @app.get("/games/{session_id}/analysis")
    def analysis(session_id: str) -> dict:
        session = store.get(session_id)
        with session.lock:
            try:
                result = session.solver.outcome(session.position)
                winning = session.solver.best_moves(session.position, session.to_move)
            except ResourceBudgetError as exc:
                raise HTTPException(503, detail=str(exc))
            return {
                "outcome": result.value,
                "to_move": session.to_move.value,
                "winning_moves": winning,
                "winning_move_labels": [str(session.graph.label_of(v)) for v in winning],
                "position": session.position.to_json(),
            }

    return app


app = create_app()
