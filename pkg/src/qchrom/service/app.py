"""HTTP service exposing the qchrom operations.

Run with ``qchrom serve`` or ``uvicorn qchrom.service.app:app``.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse

from qchrom import __version__
from qchrom.errors import QChromError
from qchrom.service import ops
from qchrom.service.models import (
    BoundsRequest,
    BoundsResponse,
    ExactRequest,
    ExactResponse,
    LiftCheckRequest,
    LiftCheckResponse,
    Table1Response,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="qchrom",
    version=__version__,
    description="Spectral lower bounds on quantum chromatic numbers, "
    "certificate verification, and exact solvers.",
)


@app.exception_handler(QChromError)
async def _qchrom_error(request: Request, exc: QChromError) -> JSONResponse:
    # Domain errors are the caller's fault: bad graph text, malformed
    # certificate, non-Hermitian weights. Map them all to 400.
    return JSONResponse(
        status_code=400,
        content={"detail": str(exc), "kind": type(exc).__name__},
    )


@app.get("/health")
async def health() -> dict:
    return {"status": "ok", "service": "qchrom", "version": __version__}


@app.post("/bounds", response_model=BoundsResponse)
async def bounds(req: BoundsRequest) -> BoundsResponse:
    return ops.run_bounds(req)


@app.post("/exact", response_model=ExactResponse)
async def exact(req: ExactRequest) -> ExactResponse:
    return ops.run_exact(req)


@app.post("/certificates/verify", response_model=VerifyResponse)
async def verify(req: VerifyRequest) -> VerifyResponse:
    return ops.run_verify(req)


@app.post("/certificates/lift-check", response_model=LiftCheckResponse)
async def lift_check(req: LiftCheckRequest) -> LiftCheckResponse:
    return ops.run_lift_check(req)


@app.get("/table1", response_model=Table1Response)
async def table1(budget: float | None = Query(default=None, gt=0.0)) -> Table1Response:
    return ops.run_table1(budget)
