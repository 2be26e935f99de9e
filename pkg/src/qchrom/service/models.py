"""Request and response schemas for the qchrom service."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GraphInput(BaseModel):
    """A graph given by exactly one of: graph6 string, edge list text, generator spec.

    ``generator`` uses the CLI syntax, e.g. ``"petersen"`` or ``"circulant:13,1,5"``.
    ``seed`` only affects randomized generators.
    """

    model_config = ConfigDict(extra="forbid")

    g6: str | None = None
    edge_list: str | None = None
    generator: str | None = None
    seed: int = 0

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "GraphInput":
        given = [s for s in (self.g6, self.edge_list, self.generator) if s is not None]
        if len(given) != 1:
            raise ValueError("exactly one of g6, edge_list, generator must be given")
        return self


class BoundsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput
    # Optional Hermitian weight matrix; entries are numbers or [re, im] pairs.
    weights: list[list[Any]] | None = None


class BoundValue(BaseModel):
    # value is the bound itself when computed, else 1.0 (the vacuous bound).
    value: float
    applicable: bool
    computed: bool


class BoundsResponse(BaseModel):
    graph: str
    n: int
    m: int
    weighted: bool
    hoffman: BoundValue
    lima: BoundValue
    kolotilina: BoundValue
    inertia_bound: BoundValue
    ando_lin: BoundValue
    best: float
    best_ceil: int


class ExactRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput
    budget: float | None = Field(default=None, gt=0.0)


class ExactResponse(BaseModel):
    graph: str
    n: int
    m: int
    chromatic: int | None
    clique: int | None
    coloring: list[int] | None
    clique_witness: list[int] | None
    elapsed: float
    status: str
    chromatic_bracket: tuple[int, int] | None
    clique_bracket: tuple[int, int] | None


class CertificateModel(BaseModel):
    """Wire form of a quantum coloring certificate.

    ``projectors`` is the nested-list encoding (n x c matrices, each d x d with
    [re, im] entries); it is validated by the certificate reader, not pydantic.
    """

    model_config = ConfigDict(extra="forbid")

    n: int
    c: int
    d: int
    projectors: Any


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput
    certificate: CertificateModel
    tolerance: float = Field(default=1e-8, gt=0.0)


class ResidualItem(BaseModel):
    condition: str
    location: list[int]
    residual: float


class VerifyResponse(BaseModel):
    accept: bool
    n: int
    c: int
    d: int
    tolerance: float
    worst_projector: ResidualItem
    worst_completeness: ResidualItem
    worst_orthogonality: ResidualItem | None
    failures: list[ResidualItem]
    ranks: list[list[int]]


class LiftCheckRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    graph: GraphInput
    certificate: CertificateModel
    tolerance: float = Field(default=1e-8, gt=0.0)


class ResidualCheck(BaseModel):
    residual: float
    tolerance: float
    ok: bool


class LiftCheckResponse(BaseModel):
    """Diagnostics for the lifted projector family of an accepted certificate.

    All residual fields are None when the certificate itself is rejected.
    """

    certificate_accepted: bool
    passed: bool
    c: int | None = None
    lifted_dim: int | None = None
    resolution: ResidualCheck | None = None
    annihilation: ResidualCheck | None = None
    pinch_twirl: ResidualCheck | None = None
    fixed_point: ResidualCheck | None = None
    lima_identity: ResidualCheck | None = None


class Table1Row(BaseModel):
    graph: str
    n: int
    chromatic: int | None
    chromatic_bracket: tuple[int, int] | None
    inertia_bound: float
    hoffman: float
    clique: int | None
    clique_bracket: tuple[int, int] | None
    status: str


class Table1Response(BaseModel):
    rows: list[Table1Row]
    budget: float
    elapsed: float
