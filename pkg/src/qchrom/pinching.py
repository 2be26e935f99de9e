"""Pinching and twirling of complex matrices.

A pinching is X -> sum_k Q_k X Q_k for projectors {Q_k} resolving the
identity; the equivalent twirling averages conjugations by powers of the
root-of-unity unitary U = sum_k omega^k Q_k. Both operations annihilate a
matrix when they send it to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, FamilyValidationError

DEFAULT_TOL = 1e-8


def _as_complex_square(x, what: str) -> np.ndarray:
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{what} must be square, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class ProjectorFamily:
    """Orthogonal projectors {Q_k} forming a resolution of the identity.

    Validated at construction: each Q_k Hermitian and idempotent, the family
    sums to the identity, and (implied but checked) distinct projectors are
    mutually orthogonal, all within `tol` in Frobenius norm.
    """

    projectors: tuple[np.ndarray, ...]
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        if not self.projectors:
            raise FamilyValidationError("family needs at least one projector")
        mats = tuple(_as_complex_square(q, "projector") for q in self.projectors)
        dim = mats[0].shape[0]
        for k, q in enumerate(mats):
            if q.shape[0] != dim:
                raise DimensionError(f"projector {k} has order {q.shape[0]}, expected {dim}")
            if np.linalg.norm(q - q.conj().T) > self.tol:
                raise FamilyValidationError(f"projector {k} is not Hermitian within {self.tol}")
            if np.linalg.norm(q @ q - q) > self.tol:
                raise FamilyValidationError(f"projector {k} is not idempotent within {self.tol}")
        total = sum(mats[1:], start=mats[0].copy())
        if np.linalg.norm(total - np.eye(dim)) > self.tol:
            raise FamilyValidationError(f"projectors do not resolve the identity within {self.tol}")
        for k in range(len(mats)):
            for j in range(k + 1, len(mats)):
                if np.linalg.norm(mats[k] @ mats[j]) > self.tol:
                    raise FamilyValidationError(
                        f"projectors {k} and {j} are not mutually orthogonal within {self.tol}"
                    )
        for q in mats:
            q.setflags(write=False)
        object.__setattr__(self, "projectors", mats)

    @property
    def c(self) -> int:
        return len(self.projectors)

    @property
    def dim(self) -> int:
        return self.projectors[0].shape[0]


@dataclass(frozen=True)
class TwirlingUnitary:
    """Unitary U built from c-th roots of unity; U^c = I."""

    u: np.ndarray
    c: int
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        u = _as_complex_square(self.u, "twirling unitary")
        dim = u.shape[0]
        if np.linalg.norm(u.conj().T @ u - np.eye(dim)) > self.tol:
            raise FamilyValidationError(f"matrix is not unitary within {self.tol}")
        if np.linalg.norm(np.linalg.matrix_power(u, self.c) - np.eye(dim)) > self.tol:
            raise FamilyValidationError(f"U^{self.c} != I within {self.tol}")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @property
    def dim(self) -> int:
        return self.u.shape[0]


def pinch(f: ProjectorFamily, x: np.ndarray) -> np.ndarray:
    """sum_k Q_k X Q_k; Hermitian for Hermitian X, idempotent as a map."""
    xm = _as_complex_square(x, "pinch operand")
    if xm.shape[0] != f.dim:
        raise DimensionError(f"operand order {xm.shape[0]} != family dimension {f.dim}")
    out = np.zeros_like(xm)
    for q in f.projectors:
        out += q @ xm @ q
    return out


def twirling_unitary(f: ProjectorFamily) -> TwirlingUnitary:
    """U = sum_k omega^k Q_k with omega = exp(2 pi i / c)."""
    omega = np.exp(2j * np.pi / f.c)
    u = np.zeros((f.dim, f.dim), dtype=complex)
    for k, q in enumerate(f.projectors):
        u += omega**k * q
    return TwirlingUnitary(u=u, c=f.c, tol=f.tol)


def twirl(u: TwirlingUnitary, x: np.ndarray) -> np.ndarray:
    """(1/c) sum_{l in [c]} U^l X (U^dagger)^l, powers by repeated multiplication."""
    xm = _as_complex_square(x, "twirl operand")
    if xm.shape[0] != u.dim:
        raise DimensionError(f"operand order {xm.shape[0]} != unitary dimension {u.dim}")
    acc = xm.copy()
    cur = xm
    for _ in range(1, u.c):
        cur = u.u @ cur @ u.u.conj().T
        acc += cur
    return acc / u.c


def annihilation_residual(f: ProjectorFamily, x: np.ndarray) -> float:
    """Frobenius norm of pinch(f, x); zero means the pinching annihilates x."""
    return float(np.linalg.norm(pinch(f, x)))


def annihilates(f: ProjectorFamily, x: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Whether the pinching sends x to zero, relative to `tol * (1 + ||x||_F)`."""
    return annihilation_residual(f, x) <= tol * (1.0 + float(np.linalg.norm(x)))


def random_family(dim: int, c: int, seed: int) -> ProjectorFamily:
    """Random projector family: QR a complex Gaussian, group the columns.

    Each of the c groups is nonempty; deterministic given seed.
    """
    if c > dim:
        raise DimensionError(f"cannot split dimension {dim} into {c} nonempty groups")
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    qmat, _ = np.linalg.qr(z)
    cuts = np.sort(rng.choice(np.arange(1, dim), size=c - 1, replace=False)) if c > 1 else []
    groups = np.split(np.arange(dim), cuts)
    projs = [qmat[:, g] @ qmat[:, g].conj().T for g in groups]
    return ProjectorFamily(tuple(projs))
