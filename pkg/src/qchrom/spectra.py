"""Eigenvalues of symmetric/Hermitian matrices and derived spectral summaries.

Dense solver only; the intended scale is n up to a few hundred. All spectra
are reported in non-increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericsError
from .graphs import Graph, adjacency

ZERO_TOL_SCALE = 1e-9


@dataclass(frozen=True)
class SymmetricMatrix:
    """Real symmetric dense matrix; symmetrized as (X + X^T)/2 at construction."""

    entries: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.entries, dtype=float)
        if x.ndim != 2 or x.shape[0] != x.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {x.shape}")
        if x.shape[0] < 1:
            raise DimensionError("matrix order must be >= 1")
        sym = (x + x.T) / 2.0
        sym.setflags(write=False)
        object.__setattr__(self, "entries", sym)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SpectralSummary:
    """Eigenvalues (non-increasing) with inertia and signed square sums."""

    eigenvalues: np.ndarray
    n_plus: int
    n_zero: int
    n_minus: int
    s_plus: float
    s_minus: float
    zero_tolerance: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def mu_1(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def mu_n(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def inertia(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


@dataclass(frozen=True)
class LaplacianSpectra:
    """Spectra of L = D - A (theta) and Q = D + A (delta), non-increasing."""

    theta: np.ndarray
    delta: np.ndarray

    @property
    def theta_1(self) -> float:
        return float(self.theta[0])

    @property
    def delta_1(self) -> float:
        return float(self.delta[0])

    @property
    def delta_n(self) -> float:
        return float(self.delta[-1])


def _eigvalsh_desc(x: np.ndarray) -> np.ndarray:
    try:
        ev = np.linalg.eigvalsh(x)
    except np.linalg.LinAlgError as exc:
        raise NumericsError(f"eigensolver did not converge: {exc}") from exc
    return ev[::-1]


def eigenvalues(x: SymmetricMatrix) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted non-increasing."""
    return _eigvalsh_desc(x.entries)


def eigensystem(x: SymmetricMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (non-increasing) and matching orthonormal eigenvector columns."""
    try:
        ev, vecs = np.linalg.eigh(x.entries)
    except np.linalg.LinAlgError as exc:
        raise NumericsError(f"eigensolver did not converge: {exc}") from exc
    return ev[::-1], vecs[:, ::-1]


def hermitian_eigenvalues(entries: np.ndarray) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix, sorted non-increasing.

    The input is Hermitized as (X + X^dagger)/2; same contracts as
    `eigenvalues` but for complex entries.
    """
    x = np.asarray(entries)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {x.shape}")
    return _eigvalsh_desc((x + x.conj().T) / 2.0)


def summary_from_eigenvalues(ev: np.ndarray) -> SpectralSummary:
    """Classify a non-increasing spectrum into inertia and s+/s-.

    An eigenvalue counts as zero iff |mu| <= 1e-9 * max(1, |mu_1|, |mu_n|);
    the square sums run over the non-zero-classified eigenvalues only.
    """
    ev = np.asarray(ev, dtype=float)
    tau = ZERO_TOL_SCALE * max(1.0, abs(ev[0]), abs(ev[-1]))
    pos = ev > tau
    neg = ev < -tau
    return SpectralSummary(
        eigenvalues=ev,
        n_plus=int(pos.sum()),
        n_zero=int(len(ev) - pos.sum() - neg.sum()),
        n_minus=int(neg.sum()),
        s_plus=float((ev[pos] ** 2).sum()),
        s_minus=float((ev[neg] ** 2).sum()),
        zero_tolerance=tau,
    )


def summarize(x: SymmetricMatrix) -> SpectralSummary:
    """Spectral summary (inertia, s+/s-) of a real symmetric matrix."""
    return summary_from_eigenvalues(eigenvalues(x))


def laplacian_spectra(g: Graph) -> LaplacianSpectra:
    """Spectra of the Laplacian D - A and signless Laplacian D + A of g."""
    a = adjacency(g)
    d = np.diag(g.degrees())
    return LaplacianSpectra(
        theta=_eigvalsh_desc(d - a),
        delta=_eigvalsh_desc(d + a),
    )
