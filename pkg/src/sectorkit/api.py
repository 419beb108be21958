"""HTTP service over the analytics core and the record store.

All bodies are JSON. Validation failures return 422 with a list of
field-level errors; unknown ids return 404. Analytics endpoints are
stateless: they recompute from the stored table on every call, so a
restarted service answers identically after replaying its store files.

Endpoints:

* POST /tables, GET /tables/{id}
* GET /analysis/io/{id}/linkages
* GET /analysis/io/{id}/structure?variant=...&alpha=...&gi_orientation=...
* POST /tools/hhi, POST /tools/tcc (stateless what-if calculators)
* POST /plans, GET /plans/{id}, POST /plans/{id}/evaluate, GET /evaluations/{id}
* GET /healthz

Environment: DC_STORE_DIR selects the store directory (CLI flag wins),
DC_PORT the listening port.
"""

from __future__ import annotations

import os
import threading
from collections import defaultdict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .engine import ProductionPlan, evaluate_plan
from .errors import FieldError, NotFoundError, ValidationError
from .iotable import IoTable, leontief_inverse, technical_coefficients
from .linkage import analyze_linkages
from .merger import MergerScenario, hhi, screen
from .store import RecordStore
from .structure import structure_report
from .technology import all_elasticities, profile_from_dict, tca, tcc

DEFAULT_STORE_DIR = "sectorkit-store"


def resolve_store_dir(explicit: str | None = None) -> str:
    return explicit or os.environ.get("DC_STORE_DIR") or DEFAULT_STORE_DIR


def resolve_port(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get("DC_PORT")
    return int(raw) if raw else 8000


async def _json_body(request: Request) -> dict:
    try:
        payload = await request.json()
    except Exception:
        raise ValidationError(FieldError("body", "request body is not valid JSON")) from None
    if not isinstance(payload, dict):
        raise ValidationError(FieldError("body", "expected a JSON object"))
    return payload


def _table_from_payload(payload: dict) -> IoTable:
    missing = [name for name in ("sector_labels", "flows", "final_demand", "gross_output")
               if name not in payload]
    if missing:
        raise ValidationError([FieldError(name, "field is required") for name in missing])
    return IoTable.from_dict(payload)


def create_app(store: RecordStore | None = None, store_dir: str | None = None) -> FastAPI:
    if store is None:
        store = RecordStore(resolve_store_dir(store_dir))

    app = FastAPI(title="sectorkit service", docs_url=None, redoc_url=None)
    app.state.store = store
    # One evaluation in flight per plan id; distinct plans evaluate freely.
    plan_locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
    plan_locks_guard = threading.Lock()

    def lock_for(plan_id: str) -> threading.Lock:
        with plan_locks_guard:
            return plan_locks[plan_id]

    @app.exception_handler(ValidationError)
    async def on_validation_error(request: Request, exc: ValidationError):
        return JSONResponse(status_code=422, content={"detail": exc.to_dicts()})

    @app.exception_handler(NotFoundError)
    async def on_not_found(request: Request, exc: NotFoundError):
        return JSONResponse(status_code=404, content={
            "detail": [{"field": exc.kind, "message": str(exc)}]})

    @app.get("/healthz")
    async def healthz():
        return {"status": "ok"}

    @app.post("/tables")
    async def post_table(request: Request):
        payload = await _json_body(request)
        table = _table_from_payload(payload)
        record = store.persist("io_table", table.to_dict())
        return {"id": record["id"], "table": record["payload"]}

    @app.get("/tables/{table_id}")
    async def get_table(table_id: str):
        record = store.fetch("io_table", table_id)
        return {"id": record["id"], "table": record["payload"],
                "created_at": record["created_at"]}

    def load_table(table_id: str) -> IoTable:
        return IoTable.from_dict(store.fetch_payload("io_table", table_id))

    @app.get("/analysis/io/{table_id}/linkages")
    async def get_linkages(table_id: str):
        table = load_table(table_id)
        inverse = leontief_inverse(technical_coefficients(table))
        report = analyze_linkages(inverse)
        return {"table_id": table_id, **report.to_dict()}

    @app.get("/analysis/io/{table_id}/structure")
    async def get_structure(table_id: str,
                            variant: str = "intermediate-only",
                            alpha: float = 0.5,
                            gi_orientation: str = "backward"):
        table = load_table(table_id)
        report = structure_report(
            table,
            alpha_rank_weight=alpha,
            entropy_variant=variant,
            gi_orientation=gi_orientation)
        return {"table_id": table_id, **report.to_dict()}

    @app.post("/tools/hhi")
    async def post_hhi(request: Request):
        payload = await _json_body(request)
        if "shares" not in payload:
            raise ValidationError(FieldError("shares", "field is required"))
        shares = payload["shares"]
        if not isinstance(shares, (list, tuple)):
            raise ValidationError(FieldError("shares", "expected a list of percent shares"))
        extras = sorted(set(payload) - {"shares", "merging"})
        if extras:
            raise ValidationError([FieldError(name, "unknown field") for name in extras])
        response: dict = {"hhi": hhi(shares)}
        if "merging" in payload:
            verdict = screen(MergerScenario.from_dict(payload))
            response.update(verdict.to_dict())
        return response

    @app.post("/tools/tcc")
    async def post_tcc(request: Request):
        payload = await _json_body(request)
        profile = profile_from_dict(payload)
        value = tcc(profile)
        return {
            "tcc": value,
            "beta_sum": profile.beta_sum,
            "tca": tca(value, profile.eva) if profile.eva is not None else None,
            "elasticities": all_elasticities(profile),
        }

    @app.post("/plans")
    async def post_plan(request: Request):
        payload = await _json_body(request)
        plan = ProductionPlan.from_dict(payload)
        record = store.persist("plan", plan.to_dict())
        return {"id": record["id"], "plan": record["payload"]}

    @app.get("/plans/{plan_id}")
    async def get_plan(plan_id: str):
        record = store.fetch("plan", plan_id)
        return {"id": record["id"], "plan": record["payload"],
                "created_at": record["created_at"]}

    @app.post("/plans/{plan_id}/evaluate")
    async def post_evaluate(plan_id: str):
        plan = ProductionPlan.from_dict(store.fetch_payload("plan", plan_id))
        with lock_for(plan_id):
            prior = store.evaluations_for_plan(plan_id)
            evaluation = evaluate_plan(plan, plan_id=plan_id)
            payload = evaluation.to_dict()
            payload["supersedes"] = prior[-1]["id"] if prior else None
            record = store.persist("evaluation", payload)
        return {"id": record["id"], "evaluation": record["payload"]}

    @app.get("/evaluations/{evaluation_id}")
    async def get_evaluation(evaluation_id: str):
        record = store.fetch("evaluation", evaluation_id)
        return {"id": record["id"], "evaluation": record["payload"],
                "created_at": record["created_at"]}

    return app
