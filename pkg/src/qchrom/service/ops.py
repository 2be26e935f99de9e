"""Operations behind the service endpoints.

Each function maps a request model to a response model and raises QChromError
subclasses on bad input; the HTTP app and the CLI translate those uniformly.
"""

from __future__ import annotations

import math
import os
import time
from importlib import resources

import numpy as np

from qchrom import bounds as bounds_mod
from qchrom import certificates as cert_mod
from qchrom import exact as exact_mod
from qchrom import graphs as graphs_mod
from qchrom import pinching as pinching_mod
from qchrom.errors import MatrixFormatError, QChromError
from qchrom.graphs import Graph
from qchrom.service.models import (
    BoundsRequest,
    BoundsResponse,
    BoundValue,
    CertificateModel,
    ExactRequest,
    ExactResponse,
    GraphInput,
    LiftCheckRequest,
    LiftCheckResponse,
    ResidualCheck,
    ResidualItem,
    Table1Response,
    Table1Row,
    VerifyRequest,
    VerifyResponse,
)

DEFAULT_BUDGET = 60.0
BUDGET_ENV = "QCHROM_BUDGET"

# Rows of the survey table: generator name first, then any optional packaged
# fixtures (graph6 files under qchrom/data). Missing fixtures are skipped.
TABLE1_GENERATORS = ("cyclotomic13", "clebsch", "gq24")
TABLE1_FIXTURES = ("noncayley_transitive_28_3",)


def default_budget() -> float:
    """Budget resolution: explicit value wins, else QCHROM_BUDGET, else 60s."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = float(raw)
    except ValueError:
        raise QChromError(f"{BUDGET_ENV} must be a number, got {raw!r}") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise QChromError(f"{BUDGET_ENV} must be positive and finite, got {raw!r}")
    return value


def resolve_graph(gi: GraphInput) -> Graph:
    if gi.g6 is not None:
        return graphs_mod.parse_graph6(gi.g6)
    if gi.edge_list is not None:
        return graphs_mod.parse_edge_list(gi.edge_list)
    return graphs_mod.generate(gi.generator, seed=gi.seed)


def weights_from_payload(rows: list[list]) -> np.ndarray:
    """Complex matrix from nested lists; entries are numbers or [re, im] pairs."""
    if not isinstance(rows, list) or not rows:
        raise MatrixFormatError("weights must be a non-empty list of rows")
    n = len(rows)
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(
                f"weights row {i} must be a list of {n} entries (square matrix)"
            )
        for j, entry in enumerate(row):
            out[i, j] = _complex_entry(entry, i, j)
    return out


def _complex_entry(entry, i: int, j: int) -> complex:
    if isinstance(entry, bool):
        raise MatrixFormatError(f"weights[{i}][{j}] must be a number, got a bool")
    if isinstance(entry, (int, float)):
        value = complex(entry)
    elif (
        isinstance(entry, list)
        and len(entry) == 2
        and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in entry)
    ):
        value = complex(entry[0], entry[1])
    else:
        raise MatrixFormatError(
            f"weights[{i}][{j}] must be a number or an [re, im] pair, got {entry!r}"
        )
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise MatrixFormatError(f"weights[{i}][{j}] is not finite")
    return value


def run_bounds(req: BoundsRequest) -> BoundsResponse:
    g = resolve_graph(req.graph)
    w = None
    if req.weights is not None:
        w = bounds_mod.WeightMatrix(weights_from_payload(req.weights))
    report = bounds_mod.all_bounds(g, w)
    values = {
        name: BoundValue(
            value=report.value(name),
            applicable=report.applicable[name],
            computed=report.computed[name],
        )
        for name in bounds_mod.BOUND_NAMES
    }
    return BoundsResponse(
        graph=g.label(), n=g.n, m=g.m, weighted=report.weighted,
        best=report.best, best_ceil=report.best_ceil, **values,
    )


def run_exact(req: ExactRequest) -> ExactResponse:
    g = resolve_graph(req.graph)
    budget = req.budget if req.budget is not None else default_budget()
    chi = exact_mod.chromatic_number(g, budget=budget)
    remaining = max(budget - chi.elapsed, 0.05)
    omega = exact_mod.clique_number(g, budget=remaining)
    status = "complete" if chi.status == "complete" and omega.status == "complete" else "timed_out"
    return ExactResponse(
        graph=g.label(), n=g.n, m=g.m,
        chromatic=chi.chromatic,
        clique=omega.clique,
        coloring=list(chi.coloring) if chi.coloring is not None else None,
        clique_witness=list(omega.clique_witness) if omega.clique_witness is not None else None,
        elapsed=chi.elapsed + omega.elapsed,
        status=status,
        chromatic_bracket=chi.chromatic_bracket,
        clique_bracket=omega.clique_bracket,
    )


def _certificate(model: CertificateModel) -> cert_mod.QuantumColoringCert:
    return cert_mod.cert_from_payload(model.model_dump())


def run_verify(req: VerifyRequest) -> VerifyResponse:
    g = resolve_graph(req.graph)
    cert = _certificate(req.certificate)
    report = cert_mod.verify_certificate(g, cert, tol=req.tolerance)

    (pv, pk), pres = report.worst_projector()
    cv, cres = report.worst_completeness()
    okey, ores = report.worst_orthogonality()
    worst_ortho = None
    if okey is not None:
        worst_ortho = ResidualItem(condition="orthogonality", location=list(okey), residual=ores)
    failures = [
        ResidualItem(condition=cond, location=list(loc), residual=res)
        for cond, loc, res in report.failures()
    ]
    return VerifyResponse(
        accept=report.accept,
        n=report.n, c=report.c, d=report.d, tolerance=report.tolerance,
        worst_projector=ResidualItem(condition="projector", location=[pv, pk], residual=pres),
        worst_completeness=ResidualItem(condition="completeness", location=[cv], residual=cres),
        worst_orthogonality=worst_ortho,
        failures=failures,
        ranks=report.ranks.tolist(),
    )


def run_lift_check(req: LiftCheckRequest) -> LiftCheckResponse:
    """Lift an accepted certificate and report the residuals of everything the
    lifted family promises: identity resolution, annihilation of A (x) I_d,
    pinch/twirl agreement, fixing of diagonal blocks, and the c-1 term
    unitary-conjugation identity for the adjacency matrix."""
    g = resolve_graph(req.graph)
    cert = _certificate(req.certificate)
    report = cert_mod.verify_certificate(g, cert, tol=req.tolerance)
    if not report.accept:
        return LiftCheckResponse(certificate_accepted=False, passed=False)

    family = cert_mod.lift(g, cert, tol=req.tolerance)
    d = cert.d
    nd = family.dim
    a_lift = np.kron(graphs_mod.adjacency(g), np.eye(d))
    a_norm = float(np.linalg.norm(a_lift))
    tol = req.tolerance

    total = np.zeros((nd, nd), dtype=complex)
    for p in family.projectors:
        total += p
    resolution = float(np.linalg.norm(total - np.eye(nd)))

    pinched = pinching_mod.pinch(family, a_lift)
    annihilation = float(np.linalg.norm(pinched))

    u = pinching_mod.twirling_unitary(family)
    twirled = pinching_mod.twirl(u, a_lift)
    pinch_twirl = float(np.linalg.norm(pinched - twirled))

    fixed = 0.0
    for v in range(g.n):
        e = np.zeros((nd, nd), dtype=complex)
        e[v * d:(v + 1) * d, v * d:(v + 1) * d] = np.eye(d)
        fixed = max(fixed, float(np.linalg.norm(pinching_mod.pinch(family, e) - e)))

    lima_res = cert_mod.lima_identity_residual(g, cert)
    lima_tol = cert_mod.lima_identity_tolerance(g, cert)

    checks = {
        "resolution": ResidualCheck(residual=resolution, tolerance=tol, ok=resolution <= tol),
        "annihilation": ResidualCheck(
            residual=annihilation, tolerance=tol * (1.0 + a_norm),
            ok=annihilation <= tol * (1.0 + a_norm),
        ),
        "pinch_twirl": ResidualCheck(
            residual=pinch_twirl, tolerance=tol * (1.0 + a_norm),
            ok=pinch_twirl <= tol * (1.0 + a_norm),
        ),
        "fixed_point": ResidualCheck(residual=fixed, tolerance=tol, ok=fixed <= tol),
        "lima_identity": ResidualCheck(
            residual=lima_res, tolerance=lima_tol, ok=lima_res <= lima_tol,
        ),
    }
    return LiftCheckResponse(
        certificate_accepted=True,
        passed=all(c.ok for c in checks.values()),
        c=cert.c, lifted_dim=nd,
        **checks,
    )


def _fixture_graph(name: str) -> Graph | None:
    path = resources.files("qchrom.data").joinpath(f"{name}.g6")
    try:
        text = path.read_text().strip()
    except FileNotFoundError:
        return None
    g = graphs_mod.parse_graph6(text.splitlines()[0])
    return Graph(n=g.n, edges=g.edges, name=name)


def run_table1(budget: float | None = None) -> Table1Response:
    """Survey rows: order, exact chromatic and clique numbers, and the two
    strongest spectral bounds for these graphs (inertia and Hoffman)."""
    per_row = budget if budget is not None else default_budget()
    start = time.monotonic()
    graphs: list[Graph] = [graphs_mod.generate(name) for name in TABLE1_GENERATORS]
    for name in TABLE1_FIXTURES:
        g = _fixture_graph(name)
        if g is not None:
            graphs.append(g)

    rows = []
    for g in graphs:
        chi = exact_mod.chromatic_number(g, budget=per_row)
        omega = exact_mod.clique_number(g, budget=per_row)
        report = bounds_mod.all_bounds(g)
        status = "complete" if chi.status == "complete" and omega.status == "complete" else "timed_out"
        rows.append(Table1Row(
            graph=g.label(), n=g.n,
            chromatic=chi.chromatic, chromatic_bracket=chi.chromatic_bracket,
            inertia_bound=report.inertia_bound, hoffman=report.hoffman,
            clique=omega.clique, clique_bracket=omega.clique_bracket,
            status=status,
        ))
    return Table1Response(rows=rows, budget=per_row, elapsed=time.monotonic() - start)
