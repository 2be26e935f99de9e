"""Quantum coloring certificates: verification, lifting, extraction, serialization.

A certificate assigns each (vertex, color) pair a d x d orthogonal projector
P_{v,k}. It is accepted when, within tolerance, every P_{v,k} is a projector,
the projectors at each vertex sum to the identity (completeness), and
P_{v,k} P_{w,k} vanishes across every edge for every color (orthogonality).
Accepted certificates lift to block-diagonal projector families of order n*d
whose pinching annihilates A (x) I_d and fixes E (x) I_d for diagonal E; the
extraction operation inverts the lift.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CertificateFormatError,
    CertificateStructureError,
    DimensionError,
    ExtractionError,
    SizeLimitError,
    UnverifiedCertificateError,
)
from .graphs import Graph, adjacency
from .pinching import DEFAULT_TOL, ProjectorFamily, pinch, twirling_unitary

MAX_LOCAL_DIM = 64
MAX_LIFT_ORDER = 2048

LIMA_TOL = 1e-7


@dataclass(frozen=True)
class QuantumColoringCert:
    """Projectors P_{v,k} in C^{d x d}, stored as an (n, c, d, d) array."""

    n: int
    c: int
    d: int
    projectors: np.ndarray

    def __post_init__(self):
        if self.n < 1 or self.c < 1 or self.d < 1:
            raise CertificateStructureError("n, c, d must all be positive")
        if self.d > MAX_LOCAL_DIM or self.n * self.d > MAX_LIFT_ORDER:
            raise SizeLimitError(
                f"certificate size n*d = {self.n * self.d}, d = {self.d} exceeds "
                f"the supported envelope (d <= {MAX_LOCAL_DIM}, n*d <= {MAX_LIFT_ORDER})"
            )
        p = np.asarray(self.projectors, dtype=complex)
        expected = (self.n, self.c, self.d, self.d)
        if p.shape != expected:
            raise CertificateStructureError(
                f"projector array has shape {p.shape}, expected {expected}"
            )
        p.setflags(write=False)
        object.__setattr__(self, "projectors", p)

    def projector(self, v: int, k: int) -> np.ndarray:
        return self.projectors[v, k]


@dataclass(frozen=True)
class VerificationReport:
    """Frobenius residuals for every certificate condition plus the verdict."""

    n: int
    c: int
    d: int
    tolerance: float
    projector_residuals: np.ndarray       # (n, c): max of hermiticity/idempotency
    completeness_residuals: np.ndarray    # (n,)
    orthogonality_residuals: dict[tuple[int, int, int], float]  # (v, w, k) sorted
    ranks: np.ndarray                     # (n, c) numerical ranks, informational
    accept: bool

    def worst_projector(self) -> tuple[tuple[int, int], float]:
        v, k = np.unravel_index(np.argmax(self.projector_residuals), self.projector_residuals.shape)
        return (int(v), int(k)), float(self.projector_residuals[v, k])

    def worst_completeness(self) -> tuple[int, float]:
        v = int(np.argmax(self.completeness_residuals))
        return v, float(self.completeness_residuals[v])

    def worst_orthogonality(self) -> tuple[tuple[int, int, int] | None, float]:
        if not self.orthogonality_residuals:
            return None, 0.0
        key = max(self.orthogonality_residuals, key=self.orthogonality_residuals.get)
        return key, self.orthogonality_residuals[key]

    def failures(self) -> list[tuple[str, tuple, float]]:
        """Deterministically ordered (condition, location, residual) violations."""
        out = []
        for v in range(self.n):
            for k in range(self.c):
                if self.projector_residuals[v, k] > self.tolerance:
                    out.append(("projector", (v, k), float(self.projector_residuals[v, k])))
        for v in range(self.n):
            if self.completeness_residuals[v] > self.tolerance:
                out.append(("completeness", (v,), float(self.completeness_residuals[v])))
        for key, res in self.orthogonality_residuals.items():
            if res > self.tolerance:
                out.append(("orthogonality", key, res))
        return out


def verify_certificate(
    g: Graph, cert: QuantumColoringCert, tol: float = DEFAULT_TOL
) -> VerificationReport:
    """Check the certificate against g; residuals above tol reject the verdict."""
    if cert.n != g.n:
        raise CertificateStructureError(
            f"certificate has {cert.n} vertices but graph has {g.n}"
        )
    eye = np.eye(cert.d)
    proj_res = np.zeros((cert.n, cert.c))
    comp_res = np.zeros(cert.n)
    ranks = np.zeros((cert.n, cert.c), dtype=int)
    for v in range(cert.n):
        total = np.zeros((cert.d, cert.d), dtype=complex)
        for k in range(cert.c):
            p = cert.projectors[v, k]
            herm = np.linalg.norm(p - p.conj().T)
            idem = np.linalg.norm(p @ p - p)
            proj_res[v, k] = max(herm, idem)
            ranks[v, k] = int(round(float(p.trace().real)))
            total += p
        comp_res[v] = np.linalg.norm(total - eye)

    ortho = {}
    for v, w in sorted(g.edges):
        for k in range(cert.c):
            ortho[(v, w, k)] = float(
                np.linalg.norm(cert.projectors[v, k] @ cert.projectors[w, k])
            )

    accept = (
        float(proj_res.max()) <= tol
        and float(comp_res.max()) <= tol
        and all(r <= tol for r in ortho.values())
    )
    return VerificationReport(
        n=cert.n, c=cert.c, d=cert.d, tolerance=tol,
        projector_residuals=proj_res,
        completeness_residuals=comp_res,
        orthogonality_residuals=ortho,
        ranks=ranks,
        accept=accept,
    )


def lift(g: Graph, cert: QuantumColoringCert, tol: float = DEFAULT_TOL) -> ProjectorFamily:
    """Block-diagonal projectors P_k of order n*d, block (v, v) = P_{v,k}.

    Refuses certificates that do not pass verification. The resulting family
    resolves the identity; its pinching annihilates A (x) I_d and fixes
    E (x) I_d for diagonal E.
    """
    report = verify_certificate(g, cert, tol)
    if not report.accept:
        raise UnverifiedCertificateError(
            "certificate rejected by verification; refusing to lift"
        )
    n, c, d = cert.n, cert.c, cert.d
    projs = []
    for k in range(c):
        big = np.zeros((n * d, n * d), dtype=complex)
        for v in range(n):
            big[v * d:(v + 1) * d, v * d:(v + 1) * d] = cert.projectors[v, k]
        projs.append(big)
    return ProjectorFamily(tuple(projs), tol=tol)


def _block_norms(p: np.ndarray, n: int, d: int) -> np.ndarray:
    """(n, n) matrix of Frobenius norms of the d x d blocks of p."""
    blocks = p.reshape(n, d, n, d)
    return np.sqrt((np.abs(blocks) ** 2).sum(axis=(1, 3)))


def extract_certificate(
    g: Graph, f: ProjectorFamily, d: int, tol: float = DEFAULT_TOL
) -> QuantumColoringCert:
    """Recover P_{v,k} from a block-diagonal annihilating family of order n*d.

    Preconditions checked here: block-diagonality of every projector
    (off-diagonal block norms <= tol), annihilation of A (x) I_d, and the
    fixed-point property on the n diagonal vertex indicators E = e_v e_v^T
    (sufficient for all diagonal E by linearity). The returned certificate
    passes verification.
    """
    n = g.n
    if f.dim != n * d:
        raise DimensionError(
            f"family dimension {f.dim} != n*d = {n * d} for local dimension {d}"
        )
    for k, p in enumerate(f.projectors):
        norms = _block_norms(p, n, d)
        off = norms - np.diag(np.diag(norms))
        worst = float(off.max())
        if worst > tol:
            v, w = np.unravel_index(np.argmax(off), off.shape)
            raise ExtractionError(
                f"projector {k} is not block-diagonal: block ({int(v)},{int(w)}) "
                f"has norm {worst:.3e} > {tol}"
            )

    a_lift = np.kron(adjacency(g), np.eye(d))
    residual = float(np.linalg.norm(pinch(f, a_lift)))
    if residual > tol * (1.0 + float(np.linalg.norm(a_lift))):
        raise ExtractionError(
            f"pinching does not annihilate the lifted adjacency matrix: "
            f"residual {residual:.3e}"
        )

    for v in range(n):
        cols = slice(v * d, (v + 1) * d)
        fixed = np.zeros((f.dim, f.dim), dtype=complex)
        for q in f.projectors:
            fixed += q[:, cols] @ q[cols, :]
        target = np.zeros((f.dim, f.dim), dtype=complex)
        target[cols, cols] = np.eye(d)
        err = float(np.linalg.norm(fixed - target))
        if err > tol:
            raise ExtractionError(
                f"vertex indicator {v} is not a fixed point: residual {err:.3e}"
            )

    blocks = np.stack([
        np.stack([p[v * d:(v + 1) * d, v * d:(v + 1) * d] for p in f.projectors])
        for v in range(n)
    ])
    cert = QuantumColoringCert(n=n, c=f.c, d=d, projectors=blocks)
    if not verify_certificate(g, cert, tol).accept:
        raise ExtractionError("extracted blocks do not verify as a certificate")
    return cert


def lima_identity_residual(g: Graph, cert: QuantumColoringCert) -> float:
    """Residual of A(x)I = (c-1) D(x)I - sum_{l=1}^{c-1} U^l (Q(x)I) U^dagger^l.

    U is the twirling unitary of the lifted family. Accepted certificates
    satisfy the identity within 1e-7 * (1 + c * ||Q||_F).
    """
    family = lift(g, cert)  # refuses unverified certificates
    u = twirling_unitary(family).u
    d = cert.d
    a = adjacency(g)
    deg = np.diag([float(x) for x in g.degrees()])
    q_lift = np.kron(deg + a, np.eye(d))
    a_lift = np.kron(a, np.eye(d))
    d_lift = np.kron(deg, np.eye(d))

    acc = np.zeros_like(q_lift, dtype=complex)
    cur = q_lift.astype(complex)
    for _ in range(1, cert.c):
        cur = u @ cur @ u.conj().T
        acc += cur
    return float(np.linalg.norm(a_lift - (cert.c - 1) * d_lift + acc))


def lima_identity_tolerance(g: Graph, cert: QuantumColoringCert) -> float:
    """Acceptance threshold 1e-7 * (1 + c * ||Q||_F) for the identity residual."""
    a = adjacency(g)
    q = np.diag([float(x) for x in g.degrees()]) + a
    return LIMA_TOL * (1.0 + cert.c * float(np.linalg.norm(q)))


# -- JSON serialization -------------------------------------------------------


def _require(cond: bool, message: str, path: str):
    if not cond:
        raise CertificateFormatError(message, path)


def _parse_complex(entry, path: str) -> complex:
    _require(isinstance(entry, (list, tuple)) and len(entry) == 2,
             "complex entry must be a two-element [re, im] array", path)
    re_part, im_part = entry
    for part, tag in ((re_part, "[0]"), (im_part, "[1]")):
        _require(isinstance(part, (int, float)) and not isinstance(part, bool),
                 "complex component must be a number", path + tag)
        _require(math.isfinite(part), "complex component must be finite", path + tag)
    return complex(re_part, im_part)


def cert_from_payload(obj) -> QuantumColoringCert:
    """Build a certificate from decoded JSON; shape validation only."""
    _require(isinstance(obj, dict), "certificate must be a JSON object", "$")
    for key in ("n", "c", "d", "projectors"):
        _require(key in obj, f"missing field {key!r}", "$")
    for key in ("n", "c", "d"):
        _require(isinstance(obj[key], int) and not isinstance(obj[key], bool),
                 f"field {key!r} must be an integer", f"$.{key}")
        _require(obj[key] >= 1, f"field {key!r} must be positive", f"$.{key}")
    n, c, d = obj["n"], obj["c"], obj["d"]
    if d > MAX_LOCAL_DIM or n * d > MAX_LIFT_ORDER:
        raise SizeLimitError(
            f"certificate size n*d = {n * d}, d = {d} exceeds the supported "
            f"envelope (d <= {MAX_LOCAL_DIM}, n*d <= {MAX_LIFT_ORDER})"
        )

    rows = obj["projectors"]
    _require(isinstance(rows, list) and len(rows) == n,
             f"projectors must be a list of {n} per-vertex lists", "$.projectors")
    out = np.zeros((n, c, d, d), dtype=complex)
    for v, row in enumerate(rows):
        vpath = f"$.projectors[{v}]"
        _require(isinstance(row, list) and len(row) == c,
                 f"vertex entry must list {c} matrices", vpath)
        for k, mat in enumerate(row):
            mpath = f"{vpath}[{k}]"
            _require(isinstance(mat, list) and len(mat) == d,
                     f"matrix must have {d} rows", mpath)
            for i, mrow in enumerate(mat):
                rpath = f"{mpath}[{i}]"
                _require(isinstance(mrow, list) and len(mrow) == d,
                         f"matrix row must have {d} entries (ragged matrix)", rpath)
                for j, entry in enumerate(mrow):
                    out[v, k, i, j] = _parse_complex(entry, f"{rpath}[{j}]")
    return QuantumColoringCert(n=n, c=c, d=d, projectors=out)


def read_certificate(data: str | bytes) -> QuantumColoringCert:
    """Parse the JSON certificate format; no semantic validation."""
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"malformed JSON: {exc.msg}", f"line {exc.lineno}")
    return cert_from_payload(obj)


def cert_to_payload(cert: QuantumColoringCert) -> dict:
    """Certificate as a JSON-ready dict, complex entries as [re, im] doubles."""
    return {
        "n": cert.n,
        "c": cert.c,
        "d": cert.d,
        "projectors": [
            [
                [
                    [[float(z.real), float(z.imag)] for z in row]
                    for row in cert.projectors[v, k]
                ]
                for k in range(cert.c)
            ]
            for v in range(cert.n)
        ],
    }


def write_certificate(cert: QuantumColoringCert) -> str:
    """Serialize at full double precision (json round-trips Python floats)."""
    return json.dumps(cert_to_payload(cert))
