"""FastAPI service wrapping the core library.

Run with: uvicorn comdrift.service:app
"""

from __future__ import annotations

import dataclasses

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ComdriftError
from ..io import report_document
from ..migration import Snapshot, analyze_timeline
from ..simulation import gradient_check, property_suite, standard_sweep
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    HealthResponse,
    SimulateRequest,
    SimulateResponse,
    SweepRowOut,
    ValidateRequest,
    ValidateResponse,
    ViolationOut,
)

app = FastAPI(
    title="comdrift",
    version=__version__,
    description="Entropy-based split/shrink/merge/expand indices for community timelines.",
)


@app.exception_handler(ComdriftError)
async def _domain_error(request: Request, exc: ComdriftError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
    snapshots = [
        Snapshot(time=s.time, assignment=dict(s.assignment)) for s in request.snapshots
    ]
    reports = analyze_timeline(snapshots)
    return AnalyzeResponse(**report_document(reports))


@app.post("/simulate", response_model=SimulateResponse)
def simulate(request: SimulateRequest) -> SimulateResponse:
    rows = standard_sweep(
        mode=request.mode,
        m_max=request.m_max,
        eta_steps=request.eta_steps,
        seed=request.seed,
    )
    return SimulateResponse(rows=[SweepRowOut(**dataclasses.asdict(r)) for r in rows])


@app.post("/validate", response_model=ValidateResponse)
def validate(request: ValidateRequest) -> ValidateResponse:
    violations = property_suite(request.trials, request.seed)
    violations += gradient_check(step=request.gradient_step)
    return ValidateResponse(
        ok=not violations,
        trials=request.trials,
        violations=[ViolationOut(**dataclasses.asdict(v)) for v in violations],
    )
