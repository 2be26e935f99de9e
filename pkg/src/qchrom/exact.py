"""Exact chromatic and clique numbers for small graphs.

Chromatic number by DSATUR-ordered branch and bound: a maximum-clique seed
gives the lower bound and precolored start, a DSATUR greedy pass gives the
upper bound, then k-colorability is decided for increasing k. Clique number
by Tomita-style branch and bound with a greedy-coloring prune. Adjacency is
kept as per-vertex bitmasks, so everything is exact integer work.

Calls take a wall-clock budget; hitting it returns the best known bracket
with status "timed_out" instead of raising.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .certificates import QuantumColoringCert
from .errors import ImproperColoringError
from .graphs import Graph

DEFAULT_BUDGET = 60.0

_CHECK_MASK = 0x3FF  # deadline poll every 1024 nodes


@dataclass(frozen=True)
class ExactReport:
    """Exact invariants with witnesses; brackets replace values on timeout."""

    chromatic: int | None = None
    clique: int | None = None
    coloring: list[int] | None = None
    clique_witness: list[int] | None = None
    elapsed: float = 0.0
    status: str = "complete"              # complete | timed_out
    chromatic_bracket: tuple[int, int] | None = None
    clique_bracket: tuple[int, int] | None = None


class _Deadline:
    def __init__(self, budget: float):
        self.t0 = time.monotonic()
        self.limit = self.t0 + budget
        self.hit = False
        self._calls = 0

    def expired(self) -> bool:
        self._calls += 1
        if self._calls & _CHECK_MASK:
            return self.hit
        if time.monotonic() > self.limit:
            self.hit = True
        return self.hit

    def elapsed(self) -> float:
        return time.monotonic() - self.t0


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _branch_order(g: Graph) -> list[int]:
    # descending degree, ties by index: deterministic branching everywhere
    deg = g.degrees()
    return sorted(range(g.n), key=lambda v: (-deg[v], v))


def _max_clique(masks: list[int], order: list[int], deadline: _Deadline) -> tuple[list[int], bool]:
    """Largest clique (vertex list) and whether the search completed."""
    best: list[int] = []

    def greedy_classes(cand: list[int]) -> list[tuple[int, int]]:
        # (vertex, class index) sorted by class; class count bounds the clique
        classes: list[tuple[int, list[int]]] = []  # (class mask, members)
        out = []
        for v in cand:
            for idx, (cmask, members) in enumerate(classes):
                if not (cmask >> v) & 1:
                    classes[idx] = (cmask | masks[v], members + [v])
                    break
            else:
                classes.append((masks[v], [v]))
        for idx, (_, members) in enumerate(classes):
            out.extend((v, idx + 1) for v in members)
        return out

    def expand(cand: list[int], cur: list[int]):
        nonlocal best
        if deadline.expired():
            return
        colored = greedy_classes(cand)
        for v, bound in reversed(colored):
            if len(cur) + bound <= len(best):
                return
            cur.append(v)
            nxt = [u for u in cand if (masks[v] >> u) & 1 and u != v]
            if nxt:
                expand(nxt, cur)
            elif len(cur) > len(best):
                best = cur.copy()
            cur.pop()
            cand = [u for u in cand if u != v]

    expand(order.copy(), [])
    if not best and order:
        best = [order[0]]
    return sorted(best), not deadline.hit


def _greedy_dsatur(masks: list[int], order: list[int]) -> list[int]:
    """DSATUR heuristic coloring; the color count is the upper bound."""
    n = len(masks)
    color = [-1] * n
    neighbor_colors = [0] * n
    static_rank = {v: i for i, v in enumerate(order)}
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (bin(neighbor_colors[u]).count("1"), -static_rank[u]),
        )
        c = 0
        while (neighbor_colors[v] >> c) & 1:
            c += 1
        color[v] = c
        w = masks[v]
        while w:
            low = w & -w
            neighbor_colors[low.bit_length() - 1] |= 1 << c
            w ^= low
    return color


def _k_colorable(
    masks: list[int],
    k: int,
    clique: list[int],
    order: list[int],
    deadline: _Deadline,
) -> list[int] | None:
    """A proper coloring with colors 0..k-1, or None if none exists.

    Returns None on timeout too; check deadline.hit to tell them apart.
    The clique is precolored with distinct colors, and a fresh color is only
    ever the next unused one (symmetry breaking).
    """
    n = len(masks)
    full = (1 << k) - 1
    color = [-1] * n
    counts = [[0] * k for _ in range(n)]   # colored-neighbor color multiplicities
    neighbor_colors = [0] * n              # bitmask of colors with count > 0
    static_rank = {v: i for i, v in enumerate(order)}

    def assign(v: int, c: int):
        color[v] = c
        w = masks[v]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            counts[u][c] += 1
            neighbor_colors[u] |= 1 << c
            w ^= low

    def unassign(v: int, c: int):
        color[v] = -1
        w = masks[v]
        while w:
            low = w & -w
            u = low.bit_length() - 1
            counts[u][c] -= 1
            if counts[u][c] == 0:
                neighbor_colors[u] &= ~(1 << c)
            w ^= low

    for i, v in enumerate(clique):
        assign(v, i)
    max_used = len(clique) - 1
    remaining = n - len(clique)

    def solve(remaining: int, max_used: int) -> bool:
        if deadline.expired():
            return False
        if remaining == 0:
            return True
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (bin(neighbor_colors[u]).count("1"), -static_rank[u]),
        )
        avail = ~neighbor_colors[v] & full
        limit = min(k - 1, max_used + 1)
        c = 0
        while c <= limit:
            if (avail >> c) & 1:
                assign(v, c)
                if solve(remaining - 1, max(max_used, c)):
                    return True
                unassign(v, c)
                if deadline.hit:
                    return False
            c += 1
        return False

    if solve(remaining, max_used):
        return color.copy()
    return None


def _normalize_colors(coloring: list[int]) -> list[int]:
    relabel: dict[int, int] = {}
    out = []
    for c in coloring:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return out


def clique_number(g: Graph, budget: float = DEFAULT_BUDGET) -> ExactReport:
    """Exact clique number with witness; bracket [found, n] on timeout."""
    deadline = _Deadline(budget)
    masks = _adjacency_masks(g)
    order = _branch_order(g)
    witness, complete = _max_clique(masks, order, deadline)
    if complete:
        return ExactReport(
            clique=len(witness), clique_witness=witness,
            elapsed=deadline.elapsed(), status="complete",
        )
    return ExactReport(
        clique=None, clique_witness=witness,
        elapsed=deadline.elapsed(), status="timed_out",
        clique_bracket=(len(witness), g.n),
    )


def chromatic_number(g: Graph, budget: float = DEFAULT_BUDGET) -> ExactReport:
    """Exact chromatic number with a proper witness coloring.

    On timeout the report carries the best (lower, upper) bracket known and
    the upper bound's witness coloring.
    """
    deadline = _Deadline(budget)
    masks = _adjacency_masks(g)
    order = _branch_order(g)

    clique, clique_complete = _max_clique(masks, order, deadline)
    greedy = _greedy_dsatur(masks, order)
    ub = max(greedy) + 1
    lb = len(clique)

    k = lb
    while k < ub and not deadline.hit:
        found = _k_colorable(masks, k, clique, order, deadline)
        if found is not None:
            greedy, ub = found, k
            break
        if not deadline.hit:
            k += 1

    status = "complete" if not deadline.hit else "timed_out"
    coloring = _normalize_colors(greedy)
    used = max(coloring) + 1
    if status == "complete":
        return ExactReport(
            chromatic=used, coloring=coloring,
            clique=len(clique) if clique_complete else None,
            clique_witness=clique,
            elapsed=deadline.elapsed(), status=status,
        )
    return ExactReport(
        chromatic=None, coloring=coloring,
        clique=len(clique) if clique_complete else None,
        clique_witness=clique,
        elapsed=deadline.elapsed(), status=status,
        chromatic_bracket=(k, ub),
    )


def proper_coloring_to_certificate(g: Graph, coloring, d: int = 1) -> QuantumColoringCert:
    """Encode a proper coloring as a certificate: P_{v,k} = I_d iff color(v) = k."""
    coloring = list(coloring)
    if len(coloring) != g.n:
        raise ImproperColoringError(
            f"coloring has {len(coloring)} entries for {g.n} vertices"
        )
    for v, c in enumerate(coloring):
        if not isinstance(c, (int, np.integer)) or c < 0:
            raise ImproperColoringError(f"vertex {v} has invalid color {c!r}")
    for u, v in sorted(g.edges):
        if coloring[u] == coloring[v]:
            raise ImproperColoringError(
                f"edge ({u},{v}) is monochromatic with color {coloring[u]}"
            )
    c = max(coloring) + 1
    projectors = np.zeros((g.n, c, d, d), dtype=complex)
    for v, col in enumerate(coloring):
        projectors[v, col] = np.eye(d)
    return QuantumColoringCert(n=g.n, c=c, d=d, projectors=projectors)
