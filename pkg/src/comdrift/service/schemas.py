"""Pydantic request/response models for the HTTP service.

The analyze response mirrors the JSON report document byte-for-byte in
structure, so service clients and file consumers share one schema.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field


class SnapshotIn(BaseModel):
    time: int
    assignment: dict[str, str] = Field(
        ..., description="member id -> community id at this time step"
    )


class AnalyzeRequest(BaseModel):
    snapshots: list[SnapshotIn]


class ReportEntryOut(BaseModel):
    community: str
    size: int
    eta: float
    m: int
    entropy: float
    max_entropy: float
    sigma: float
    split: float
    shrink: float
    trend: str


class TransitionReportOut(BaseModel):
    from_time: int
    to_time: int
    n: int
    m: int
    forward: list[ReportEntryOut]
    backward: list[ReportEntryOut]


class AnalyzeResponse(BaseModel):
    schema_version: int
    reports: list[TransitionReportOut]


class SimulateRequest(BaseModel):
    mode: Literal["even", "single", "random", "all"] = "all"
    m_max: int = Field(10, ge=1)
    eta_steps: int = Field(20, ge=1, description="grid has eta_steps + 1 points")
    seed: int = 0


class SweepRowOut(BaseModel):
    mode: str
    m: int
    eta: float
    seed: int | None
    split: float
    shrink: float


class SimulateResponse(BaseModel):
    rows: list[SweepRowOut]


class ValidateRequest(BaseModel):
    trials: int = Field(1000, ge=1)
    seed: int = 0
    gradient_step: float = Field(1e-6, gt=0, le=1e-3)


class ViolationOut(BaseModel):
    property: str
    inputs: dict[str, Any]
    observed: float
    expected: float


class ValidateResponse(BaseModel):
    ok: bool
    trials: int
    violations: list[ViolationOut]


class HealthResponse(BaseModel):
    status: str
    version: str
