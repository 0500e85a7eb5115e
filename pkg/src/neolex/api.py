"""HTTP JSON API for the review workflow, consumed by the browser frontend.

Endpoints:
  GET  /api/candidates?status=&sort=freq|lemma&offset=&limit=
  GET  /api/candidates/{lemma}
  POST /api/candidates/{lemma}/decision
  GET  /api/report
  GET  /api/export?format=tsv|json
  GET  /api/meta           (topic vocabulary + queue counters for the UI)

Static frontend assets, when present, are served from the directory passed to
:func:`make_app`. All mutations go through ``ReviewService.decide``.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .candidates import ClassLabels, RejectReason, Status
from .review import (
    Action,
    ReviewDecision,
    ReviewService,
    UnknownLemmaError,
    ValidationError,
    aggregate_report,
    export_lexicon,
)


def _summary(cand) -> dict:
    d = cand.as_dict()
    d.pop("contexts")
    return d


def _parse_decision(lemma: str, body: dict) -> ReviewDecision:
    if not isinstance(body, dict):
        raise ValidationError("decision body must be a JSON object")
    try:
        action = Action(body.get("action"))
    except ValueError:
        raise ValidationError(f"unknown action {body.get('action')!r}") from None
    reason = None
    if body.get("reject_reason") is not None:
        try:
            reason = RejectReason(body["reject_reason"])
        except ValueError:
            raise ValidationError(f"unknown reject_reason {body['reject_reason']!r}") from None
    labels = None
    if body.get("labels") is not None:
        try:
            labels = ClassLabels.from_dict(body["labels"])
        except (KeyError, ValueError) as exc:
            raise ValidationError(f"bad labels: {exc}") from None
    reviewer = body.get("reviewer") or "anonymous"
    if not isinstance(reviewer, str):
        raise ValidationError("reviewer must be a string")
    return ReviewDecision(lemma=lemma, action=action, reject_reason=reason, labels=labels, reviewer=reviewer)


def make_app(service: ReviewService, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="neolex review service")
    state = service.state

    @app.get("/api/candidates")
    def list_candidates(
        status: str | None = Query(default=None),
        sort: str = Query(default="freq"),
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=50, ge=1, le=500),
    ):
        if status is not None:
            try:
                wanted = Status(status)
            except ValueError:
                raise HTTPException(422, f"unknown status {status!r}")
            items = [c for c in state.candidates.values() if c.status is wanted]
        else:
            items = list(state.candidates.values())
        if sort == "freq":
            items.sort(key=lambda c: (-c.freq, c.lemma))
        elif sort == "lemma":
            items.sort(key=lambda c: c.lemma)
        else:
            raise HTTPException(422, f"unknown sort {sort!r}")
        page = items[offset : offset + limit]
        return {
            "total": len(items),
            "offset": offset,
            "limit": limit,
            "items": [_summary(c) for c in page],
        }

    @app.get("/api/candidates/{lemma}")
    def get_candidate(lemma: str):
        try:
            return state.get(lemma).as_dict()
        except UnknownLemmaError:
            raise HTTPException(404, f"no candidate {lemma!r}")

    @app.post("/api/candidates/{lemma}/decision")
    async def post_decision(lemma: str, request: Request):
        try:
            body = await request.json()
        except Exception:
            raise HTTPException(422, "body is not valid JSON")
        try:
            decision = _parse_decision(lemma, body)
            cand = service.decide(decision)
        except UnknownLemmaError:
            raise HTTPException(404, f"no candidate {lemma!r}")
        except ValidationError as exc:
            raise HTTPException(422, str(exc))
        return {"ok": True, "candidate": _summary(cand)}

    @app.get("/api/report")
    def get_report():
        return aggregate_report(state.lexicon()).as_dict()

    @app.get("/api/export")
    def get_export(format: str = Query(default="tsv")):
        try:
            doc = export_lexicon(state, format)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        if format == "tsv":
            return PlainTextResponse(doc, media_type="text/tab-separated-values; charset=utf-8")
        return PlainTextResponse(doc, media_type="application/json; charset=utf-8")

    @app.get("/api/meta")
    def get_meta():
        by_status = {s.value: 0 for s in Status}
        for cand in state.candidates.values():
            by_status[cand.status.value] += 1
        return {
            "topics": state.topics,
            "total": len(state.candidates),
            "by_status": by_status,
            "decision_count": state.decision_count,
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")
    return app


def serve(service: ReviewService, port: int, host: str = "127.0.0.1", static_dir: str | Path | None = None) -> None:
    """Run the review API (blocking)."""
    import uvicorn

    app = make_app(service, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")
