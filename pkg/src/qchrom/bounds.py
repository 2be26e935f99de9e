"""Spectral lower bounds for the (quantum) chromatic number.

Five bounds on one matrix spectrum, all of the shape 1 + ratio:
Hoffman mu_1/|mu_n|, Lima 2m/(2m - n*delta_n), Kolotilina
mu_1/(mu_1 - delta_1 + theta_1), the inertia ratio n+-/n-+, and the
Ando-Lin square-sum ratio s+-/s-+. Every bound also applies to a weighted
adjacency matrix W o A for Hermitian W; in weighted mode only the pure
adjacency-spectrum bounds (Hoffman, inertia, Ando-Lin) are computed, since
there is no canonical weighted degree matrix for the other two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError
from .graphs import Graph, adjacency
from .spectra import (
    LaplacianSpectra,
    SpectralSummary,
    hermitian_eigenvalues,
    laplacian_spectra,
    summarize,
    summary_from_eigenvalues,
    SymmetricMatrix,
)

HERMITIAN_TOL = 1e-12

BOUND_NAMES = ("hoffman", "lima", "kolotilina", "inertia_bound", "ando_lin")

# Bounds that read only the (weighted) adjacency spectrum; the other two
# need the degree matrix and stay unweighted-only.
_SPECTRUM_ONLY = ("hoffman", "inertia_bound", "ando_lin")


@dataclass(frozen=True)
class WeightMatrix:
    """Hermitian weight matrix for the Hadamard product W o A."""

    entries: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.entries, dtype=complex)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise DimensionError(f"weight matrix must be square, got shape {w.shape}")
        herm = (w + w.conj().T) / 2.0
        if np.linalg.norm(w - herm) > HERMITIAN_TOL * (1.0 + np.linalg.norm(w)):
            raise DimensionError("weight matrix is not Hermitian")
        herm.setflags(write=False)
        object.__setattr__(self, "entries", herm)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class BoundsReport:
    """The five bounds with applicability/computed flags and their maximum."""

    hoffman: float
    lima: float
    kolotilina: float
    inertia_bound: float
    ando_lin: float
    applicable: dict[str, bool]
    computed: dict[str, bool]
    weighted: bool
    best: float
    best_ceil: int

    def value(self, name: str) -> float:
        return getattr(self, name)


def ceil_strict(x: float) -> int:
    # 1e-9 slack so float fuzz on integer-valued bounds cannot round up;
    # rounding down keeps the lower bound sound.
    return math.ceil(x - 1e-9 * max(1.0, abs(x)))


def hoffman(s: SpectralSummary) -> float:
    """1 + mu_1/|mu_n|; 1 when there is no negative eigenvalue (edgeless)."""
    if s.n_minus == 0:
        return 1.0
    return 1.0 + s.mu_1 / abs(s.mu_n)


def lima(g: Graph, ls: LaplacianSpectra) -> float:
    """1 + 2m/(2m - n*delta_n) with delta_n the least signless-Laplacian eigenvalue."""
    two_m = 2.0 * g.m
    if g.m == 0:
        return 1.0
    denom = two_m - g.n * ls.delta_n
    if denom <= 0.0:
        # cannot occur for a graph with an edge; guard anyway
        return 1.0
    return 1.0 + two_m / denom


def kolotilina(s: SpectralSummary, ls: LaplacianSpectra) -> float:
    """1 + mu_1/(mu_1 - delta_1 + theta_1)."""
    if s.n_minus == 0:
        return 1.0
    denom = s.mu_1 - ls.delta_1 + ls.theta_1
    if denom <= 0.0:
        return 1.0
    return 1.0 + s.mu_1 / denom


def inertia_bound(s: SpectralSummary) -> float:
    """1 + max(n+/n-, n-/n+); 1 when either count is zero."""
    if s.n_plus == 0 or s.n_minus == 0:
        return 1.0
    return 1.0 + max(s.n_plus / s.n_minus, s.n_minus / s.n_plus)


def ando_lin(s: SpectralSummary) -> float:
    """1 + max(s+/s-, s-/s+); 1 when either square sum vanishes."""
    if s.s_plus == 0.0 or s.s_minus == 0.0:
        return 1.0
    return 1.0 + max(s.s_plus / s.s_minus, s.s_minus / s.s_plus)


def all_bounds(g: Graph, w: WeightMatrix | None = None) -> BoundsReport:
    """Evaluate the five bounds for g, optionally on the weighted matrix W o A."""
    if w is not None and w.order != g.n:
        raise DimensionError(
            f"weight matrix order {w.order} does not match vertex count {g.n}"
        )

    weighted = w is not None
    if weighted:
        wa = w.entries * adjacency(g)
        s = summary_from_eigenvalues(hermitian_eigenvalues(wa))
        values = {
            "hoffman": hoffman(s),
            "lima": 1.0,
            "kolotilina": 1.0,
            "inertia_bound": inertia_bound(s),
            "ando_lin": ando_lin(s),
        }
        computed = {name: name in _SPECTRUM_ONLY for name in BOUND_NAMES}
        # W o A may vanish even when g has edges (weights zero on every edge)
        active = s.n_minus >= 1
        applicable = {
            name: active and computed[name] for name in BOUND_NAMES
        }
    else:
        s = summarize(SymmetricMatrix(adjacency(g)))
        ls = laplacian_spectra(g)
        values = {
            "hoffman": hoffman(s),
            "lima": lima(g, ls),
            "kolotilina": kolotilina(s, ls),
            "inertia_bound": inertia_bound(s),
            "ando_lin": ando_lin(s),
        }
        computed = {name: True for name in BOUND_NAMES}
        applicable = {name: g.m >= 1 for name in BOUND_NAMES}

    usable = [values[name] for name in BOUND_NAMES if applicable[name]]
    best = max(usable) if usable else 1.0
    return BoundsReport(
        hoffman=values["hoffman"],
        lima=values["lima"],
        kolotilina=values["kolotilina"],
        inertia_bound=values["inertia_bound"],
        ando_lin=values["ando_lin"],
        applicable=applicable,
        computed=computed,
        weighted=weighted,
        best=best,
        best_ceil=ceil_strict(best),
    )
