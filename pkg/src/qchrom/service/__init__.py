"""Service layer: pydantic request/response models and the operations behind them.

The CLI calls the operations in-process; the FastAPI app in
:mod:`qchrom.service.app` exposes the same operations over HTTP.
"""

from qchrom.service.models import (
    BoundsRequest,
    BoundsResponse,
    CertificateModel,
    ExactRequest,
    ExactResponse,
    GraphInput,
    LiftCheckRequest,
    LiftCheckResponse,
    Table1Response,
    VerifyRequest,
    VerifyResponse,
)

__all__ = [
    "BoundsRequest",
    "BoundsResponse",
    "CertificateModel",
    "ExactRequest",
    "ExactResponse",
    "GraphInput",
    "LiftCheckRequest",
    "LiftCheckResponse",
    "Table1Response",
    "VerifyRequest",
    "VerifyResponse",
]
