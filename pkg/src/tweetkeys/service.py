"""HTTP service hosting blind-judgment sessions.

Endpoints (JSON bodies, snake_case fields):

    POST /sessions                   create a session from inline pairs or a
                                     server-side dataset id
    GET  /sessions/{id}/next         current pair (two unlabeled lists) or a
                                     completion marker
    POST /sessions/{id}/judgments    record the pick for the current pair
    GET  /sessions/{id}/result       tallies, only once complete
    GET  /healthz

Pre-completion responses never carry provenance: which list is machine
output is only visible in /result.  Sessions persist as append-only JSONL
files under the sessions directory, one per session, and are replayed on
demand so records survive restarts.
"""

from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .defaults import DEMO_DATASET_ID, data_text
from .evaluation import SessionPair, TuringSession, new_session, tally


class PairIn(BaseModel):
    tweet: str
    human: list[str]
    machine: list[str]


class SessionRequest(BaseModel):
    criterion: str = ""
    pairs: list[PairIn] | None = None
    dataset_id: str | None = None
    seed: int | None = None


class JudgmentIn(BaseModel):
    pair_index: int
    choice: str


class SessionStore:
    """In-memory sessions backed by one append-only JSONL file each."""

    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, TuringSession] = {}
        self._lock = threading.Lock()

    def _path(self, session_id: str) -> Path:
        return self.directory / f"{session_id}.jsonl"

    def _append(self, session_id: str, event: dict) -> None:
        with self._path(session_id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, ensure_ascii=False) + "\n")

    def create(self, criterion: str, pairs: list[SessionPair], seed: int | None) -> TuringSession:
        session = new_session(uuid.uuid4().hex, criterion, pairs, seed=seed)
        with self._lock:
            self._sessions[session.session_id] = session
            self._append(
                session.session_id,
                {
                    "event": "created",
                    "session_id": session.session_id,
                    "criterion": criterion,
                    "seed": seed,
                    "machine_sides": list(session.machine_sides),
                    "pairs": [
                        {"tweet": p.tweet, "human": list(p.human), "machine": list(p.machine)}
                        for p in pairs
                    ],
                },
            )
        return session

    def get(self, session_id: str) -> TuringSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                session = self._load(session_id)
                if session is None:
                    raise KeyError(session_id)
                self._sessions[session_id] = session
            return session

    def _load(self, session_id: str) -> TuringSession | None:
        path = self._path(session_id)
        if not path.exists():
            return None
        session: TuringSession | None = None
        for line in path.read_text(encoding="utf-8").splitlines():
            event = json.loads(line)
            if event["event"] == "created":
                session = TuringSession(
                    session_id=event["session_id"],
                    criterion=event["criterion"],
                    pairs=tuple(
                        SessionPair(p["tweet"], tuple(p["human"]), tuple(p["machine"]))
                        for p in event["pairs"]
                    ),
                    machine_sides=tuple(event["machine_sides"]),
                    seed=event.get("seed"),
                )
            elif event["event"] == "judgment" and session is not None:
                session.judge(event["pair_index"], event["choice"])
        return session

    def judge(self, session_id: str, pair_index: int, choice: str) -> TuringSession:
        with self._lock:
            session = self._sessions.get(session_id)
            if session is None:
                session = self._load(session_id)
                if session is None:
                    raise KeyError(session_id)
                self._sessions[session_id] = session
            session.judge(pair_index, choice)
            self._append(
                session_id,
                {"event": "judgment", "pair_index": pair_index, "choice": choice},
            )
            if session.complete:
                t = tally(session)
                self._append(
                    session_id,
                    {
                        "event": "completed",
                        "tally": {"x": t.x, "y": t.y, "z": t.z, "n": t.n, "t": t.t},
                    },
                )
            return session


def _demo_pairs() -> list[SessionPair]:
    entries = json.loads(data_text("demo_turing.json"))
    return [
        SessionPair(e["tweet"], tuple(e["human"]), tuple(e["machine"]))
        for e in entries
    ]


def create_app(sessions_dir: str | Path = "sessions", ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="tweetkeys judgment service")
    store = SessionStore(Path(sessions_dir))
    app.state.store = store

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.post("/sessions")
    def create_session(request: SessionRequest):
        if request.dataset_id is not None:
            if request.dataset_id != DEMO_DATASET_ID:
                raise HTTPException(status_code=400, detail="unknown dataset_id")
            pairs = _demo_pairs()
        elif request.pairs:
            pairs = [
                SessionPair(p.tweet, tuple(p.human), tuple(p.machine))
                for p in request.pairs
            ]
        else:
            raise HTTPException(status_code=400, detail="dataset is empty")
        session = store.create(request.criterion, pairs, request.seed)
        return {"session_id": session.session_id, "pair_count": session.n}

    @app.get("/sessions/{session_id}/next")
    def next_pair(session_id: str):
        session = _get(store, session_id)
        index = session.next_index
        if index is None:
            return {"complete": True, "total": session.n}
        list_a, list_b = session.presented_lists(index)
        pair = session.pairs[index]
        return {
            "session_id": session_id,
            "index": index,
            "total": session.n,
            "tweet": pair.tweet,
            "list_a": list(list_a),
            "list_b": list(list_b),
        }

    @app.post("/sessions/{session_id}/judgments")
    def submit_judgment(session_id: str, judgment: JudgmentIn):
        session = _get(store, session_id)
        try:
            session = store.judge(session_id, judgment.pair_index, judgment.choice)
        except ValueError as e:
            raise HTTPException(status_code=409, detail=str(e)) from e
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session") from None
        return {
            "accepted": True,
            "judged": len(session.judgments),
            "total": session.n,
            "complete": session.complete,
        }

    @app.get("/sessions/{session_id}/result")
    def session_result(session_id: str):
        session = _get(store, session_id)
        if not session.complete:
            raise HTTPException(status_code=409, detail="session still open")
        t = tally(session)
        return {
            "session_id": session_id,
            "criterion": session.criterion,
            "x": t.x,
            "y": t.y,
            "z": t.z,
            "n": t.n,
            "t": t.t,
            "passed": t.passed,
            "pairs": [
                {
                    "index": i,
                    "tweet": session.pairs[i].tweet,
                    "identical": session.pairs[i].identical,
                    "machine_side": session.machine_sides[i],
                    "choice": session.judgments[i],
                    "outcome": session.pair_outcome(i),
                }
                for i in range(session.n)
            ],
        }

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def _get(store: SessionStore, session_id: str) -> TuringSession:
    try:
        return store.get(session_id)
    except KeyError:
        raise HTTPException(status_code=404, detail="unknown session") from None
