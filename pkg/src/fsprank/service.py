"""JSON-over-HTTP what-if service for interactive expert assessment.

Endpoints:
    GET  /health
    POST /sessions                         create a session from an assessment
    GET  /sessions/{sid}                   session metadata, document, history
    GET  /sessions/{sid}/rank?measure=g1   decision table for the current state
    POST /sessions/{sid}/whatif            grade edits / attribute eliminations
    GET  /sessions/{sid}/explain/{alt}     per-opponent comparison report

Sessions live in memory; when a state directory is configured every session
is also snapshotted to JSON and restored on startup by replaying its patch
history, so the current ranking is always reproducible from the initial
document plus the recorded patches.  Mutations are serialized per session;
every response is a pure function of (session state, request).
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .core import FuzzySoftSet, Grade, Measure, explain, rank, restrict_attributes
from .errors import (
    EmptyAttributeSetError,
    FsprankError,
    ParseError,
    UnknownAlternativeError,
)
from .io import (
    JSON_FORMAT,
    AssessmentDocument,
    emit_assessment,
    emit_decision_table,
    explanation_payload,
    parse_assessment_document,
)


@dataclass
class Session:
    session_id: str
    created_at: str
    document: AssessmentDocument
    fss: FuzzySoftSet
    history: list[dict[str, Any]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def apply_patch(
    fss: FuzzySoftSet,
    edits: Sequence[Mapping[str, Any]] = (),
    eliminate: Iterable[str] = (),
) -> FuzzySoftSet:
    """Apply grade edits then attribute eliminations, returning a new set."""
    if edits:
        grades = [list(row) for row in fss.grades]
        for edit in edits:
            i = fss.alternative_position(str(edit["alternative"]))
            j = fss.attribute_position(str(edit["attribute"]))
            grades[i][j] = Grade.of(edit["grade"])
        fss = FuzzySoftSet(
            alternatives=fss.alternatives,
            attributes=fss.attributes,
            grades=tuple(tuple(row) for row in grades),
            attribute_labels=fss.attribute_labels,
        )
    eliminate = list(eliminate)
    if eliminate:
        for attribute in eliminate:
            fss.attribute_position(str(attribute))  # unknown ids fail before emptiness
        keep = [e for e in fss.attributes if e not in set(eliminate)]
        if not keep:
            raise EmptyAttributeSetError("patch would eliminate every attribute")
        fss = restrict_attributes(fss, keep)
    return fss


def replay_history(
    document: AssessmentDocument, history: Sequence[Mapping[str, Any]]
) -> FuzzySoftSet:
    """Rebuild the current state from the initial document and its patches."""
    fss = document.to_fuzzy_soft_set()
    for patch in history:
        fss = apply_patch(fss, patch.get("edits", ()), patch.get("eliminate", ()))
    return fss


class SessionStore:
    """In-memory session registry with optional JSON snapshot persistence."""

    def __init__(self, state_dir: Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._state_dir = state_dir
        if state_dir is not None:
            state_dir.mkdir(parents=True, exist_ok=True)
            self._restore()

    def create(self, document: AssessmentDocument) -> Session:
        session = Session(
            session_id=uuid.uuid4().hex[:12],
            created_at=datetime.now(timezone.utc).isoformat(),
            document=document,
            fss=document.to_fuzzy_soft_set(),
        )
        with self._lock:
            self._sessions[session.session_id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def record_patch(self, session: Session, patch: dict[str, Any], fss: FuzzySoftSet) -> None:
        session.history.append(patch)
        session.fss = fss
        self._snapshot(session)

    def _snapshot_path(self, session_id: str) -> Path:
        assert self._state_dir is not None
        return self._state_dir / f"session-{session_id}.json"

    def _snapshot(self, session: Session) -> None:
        if self._state_dir is None:
            return
        payload = {
            "session_id": session.session_id,
            "created_at": session.created_at,
            "document": json.loads(emit_assessment(session.document, JSON_FORMAT)),
            "history": session.history,
        }
        self._snapshot_path(session.session_id).write_text(
            json.dumps(payload, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
        )

    def _restore(self) -> None:
        assert self._state_dir is not None
        for path in sorted(self._state_dir.glob("session-*.json")):
            payload = json.loads(path.read_text(encoding="utf-8"))
            document = parse_assessment_document(
                json.dumps(payload["document"]), JSON_FORMAT
            )
            session = Session(
                session_id=payload["session_id"],
                created_at=payload["created_at"],
                document=document,
                fss=replay_history(document, payload["history"]),
                history=list(payload["history"]),
            )
            self._sessions[session.session_id] = session


def _error_response(exc: FsprankError, status: int) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"code": exc.code, "message": str(exc)}},
    )


def _not_found(what: str) -> JSONResponse:
    return JSONResponse(
        status_code=404,
        content={"error": {"code": "NOT_FOUND", "message": what}},
    )


def _table_response(fss: FuzzySoftSet, measure: Measure) -> Response:
    body = emit_decision_table(rank(fss, measure), JSON_FORMAT)
    return Response(content=body, media_type="application/json")


def create_app(
    state_dir: Path | None = None, cors_origins: tuple[str, ...] = ("*",)
) -> FastAPI:
    app = FastAPI(title="fsprank", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(state_dir)
    app.state.store = store

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request) -> Response:
        body = await request.body()
        try:
            document = parse_assessment_document(body, JSON_FORMAT)
            session = store.create(document)
        except FsprankError as exc:
            return _error_response(exc, 400)
        return JSONResponse(status_code=201, content={"session_id": session.session_id})

    @app.get("/sessions/{sid}")
    def session_info(sid: str) -> Response:
        session = store.get(sid)
        if session is None:
            return _not_found(f"unknown session {sid!r}")
        return JSONResponse(
            content={
                "session_id": session.session_id,
                "created_at": session.created_at,
                "document": json.loads(emit_assessment(session.document, JSON_FORMAT)),
                "history": session.history,
            }
        )

    @app.get("/sessions/{sid}/rank")
    def session_rank(sid: str, measure: str = "g1") -> Response:
        session = store.get(sid)
        if session is None:
            return _not_found(f"unknown session {sid!r}")
        try:
            selected = Measure.from_text(measure)
        except ParseError as exc:
            return _error_response(exc, 400)
        return _table_response(session.fss, selected)

    @app.post("/sessions/{sid}/whatif")
    async def session_whatif(sid: str, request: Request) -> Response:
        session = store.get(sid)
        if session is None:
            return _not_found(f"unknown session {sid!r}")
        try:
            payload = await request.json()
        except json.JSONDecodeError as exc:
            return _error_response(ParseError(f"invalid JSON body: {exc.msg}"), 400)
        if not isinstance(payload, dict):
            return _error_response(ParseError("body must be a JSON object"), 400)
        edits = payload.get("edits", [])
        eliminate = payload.get("eliminate", [])
        dry_run = bool(payload.get("dry_run", False))
        try:
            selected = Measure.from_text(str(payload.get("measure", "g1")))
        except ParseError as exc:
            return _error_response(exc, 400)
        if not isinstance(edits, list) or not isinstance(eliminate, list):
            return _error_response(
                ParseError("'edits' and 'eliminate' must be arrays"), 400
            )
        with session.lock:
            before_fss = session.fss
            try:
                after_fss = apply_patch(before_fss, edits, eliminate)
            except EmptyAttributeSetError as exc:
                return _error_response(exc, 409)
            except (FsprankError,) as exc:
                return _error_response(exc, 400)
            except (KeyError, TypeError):
                return _error_response(
                    ParseError("each edit needs alternative, attribute and grade"), 400
                )
            before = rank(before_fss, selected)
            after = rank(after_fss, selected)
            if not dry_run:
                store.record_patch(
                    session,
                    {
                        "time": datetime.now(timezone.utc).isoformat(),
                        "edits": edits,
                        "eliminate": eliminate,
                    },
                    after_fss,
                )
        before_ranks = {row.alternative: row.rank for row in before.rows}
        deltas = {
            row.alternative: before_ranks[row.alternative] - row.rank
            for row in after.rows
        }
        return JSONResponse(
            content={
                "applied": not dry_run,
                "measure": selected.value,
                "before": json.loads(emit_decision_table(before, JSON_FORMAT)),
                "after": json.loads(emit_decision_table(after, JSON_FORMAT)),
                "rank_deltas": deltas,
            }
        )

    @app.get("/sessions/{sid}/explain/{alternative}")
    def session_explain(sid: str, alternative: str) -> Response:
        session = store.get(sid)
        if session is None:
            return _not_found(f"unknown session {sid!r}")
        try:
            report = explain(session.fss, alternative)
        except UnknownAlternativeError as exc:
            return _error_response(exc, 404)
        return JSONResponse(content=explanation_payload(report))

    return app
