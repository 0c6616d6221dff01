"""Stateless JSON-over-HTTP facade for the calculator and the MC checker.

Every response is an envelope: `{"ok": true, "result": ...}` on success,
`{"ok": false, "error": {"code", "message"}}` otherwise, with code one of
DOMAIN, VALIDATION, INTERNAL.  All handlers are pure functions of the
request, so the service scales horizontally and responses are cacheable.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .core import (
    APRIORI_CURVE_DEFAULTS,
    SENSITIVITY_CURVE_DEFAULTS,
    PowerSpec,
    a_priori,
    a_priori_curve,
    check_mdes_domain,
    sensitivity,
    sensitivity_curve,
)
from .errors import DomainError
from .messages import apriori_payload, curve_payload, sensitivity_payload
from .simulate import validate_apriori, validation_payload

MAX_REPLICATIONS = 200_000

_PLACEHOLDER = """<!doctype html>
<html><head><title>plspower</title></head>
<body>
<h1>plspower service</h1>
<p>The JSON API is live under <code>/api</code>.  The web calculator has
not been built; run <code>npm run build</code> in <code>frontend/</code>
and restart with <code>--web-dir frontend/dist</code>.</p>
</body></html>
"""


class ValidateRequest(BaseModel):
    mdes: float
    alpha: float
    power: float = 0.8
    reps: int = 20_000
    seed: int = 0


def _ok(result) -> dict:
    return {"ok": True, "result": result}


def _error(code: str, message: str, status: int = 422) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"ok": False, "error": {"code": code, "message": message}})


def _resolve_web_dir(web_dir) -> Path | None:
    candidate = web_dir or os.environ.get("PLSPOWER_WEB_DIR") or "frontend/dist"
    path = Path(candidate)
    if path.is_dir() and (path / "index.html").is_file():
        return path
    return None


def create_app(web_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="plspower", docs_url=None, redoc_url=None)

    origins = os.environ.get("PLSPOWER_CORS_ORIGINS", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[o.strip() for o in origins.split(",")],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    @app.exception_handler(DomainError)
    async def on_domain_error(request: Request, exc: DomainError):
        return _error("DOMAIN", str(exc))

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error("VALIDATION", str(exc.errors()[:3]))

    @app.exception_handler(Exception)
    async def on_internal_error(request: Request, exc: Exception):
        return _error("INTERNAL", "internal error", status=500)

    @app.get("/healthz")
    async def healthz():
        return PlainTextResponse("ok")

    @app.get("/api/apriori")
    async def api_apriori(mdes: float, alpha: float, power: float = 0.8):
        result = a_priori(check_mdes_domain(mdes), PowerSpec(alpha, power))
        return _ok(apriori_payload(result))

    @app.get("/api/sensitivity")
    async def api_sensitivity(n: int, alpha: float, power: float = 0.8):
        result = sensitivity(n, PowerSpec(alpha, power))
        return _ok(sensitivity_payload(result))

    @app.get("/api/curve")
    async def api_curve(
        mode: str,
        alpha: float,
        ref: float,
        power: float = 0.8,
        lo: float | None = None,
        hi: float | None = None,
        step: float | None = None,
    ):
        spec = PowerSpec(alpha, power)
        if mode in ("apriori", "a_priori"):
            d_lo, d_hi, d_step = APRIORI_CURVE_DEFAULTS
            series = a_priori_curve(
                spec,
                d_lo if lo is None else lo,
                d_hi if hi is None else hi,
                d_step if step is None else step,
                reference_mdes=ref,
            )
        elif mode == "sensitivity":
            d_lo, d_hi, d_step = SENSITIVITY_CURVE_DEFAULTS
            series = sensitivity_curve(
                spec,
                d_lo if lo is None else _whole(lo, "lo"),
                d_hi if hi is None else _whole(hi, "hi"),
                d_step if step is None else _whole(step, "step"),
                reference_n=_whole(ref, "ref"),
            )
        else:
            raise DomainError(
                f"mode must be 'apriori' or 'sensitivity', got {mode!r}")
        return _ok(curve_payload(series, spec))

    @app.post("/api/validate")
    async def api_validate(body: ValidateRequest):
        if body.reps > MAX_REPLICATIONS:
            return _error(
                "VALIDATION",
                f"reps capped at {MAX_REPLICATIONS} to keep requests "
                f"interactive, got {body.reps}")
        report = validate_apriori(
            check_mdes_domain(body.mdes),
            PowerSpec(body.alpha, body.power),
            replications=body.reps,
            seed=body.seed,
        )
        payload = validation_payload(report)
        payload["seed"] = body.seed
        return _ok(payload)

    resolved = _resolve_web_dir(web_dir)
    if resolved is not None:
        app.mount("/", StaticFiles(directory=resolved, html=True), name="webui")
    else:
        @app.get("/")
        async def index():
            return HTMLResponse(_PLACEHOLDER)

    return app


def _whole(value: float, name: str) -> int:
    if value != int(value):
        raise DomainError(f"{name} must be a whole number for sensitivity "
                          f"curves, got {value!r}")
    return int(value)
