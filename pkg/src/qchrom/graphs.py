"""Undirected simple graphs: representation, parsers, and named generators.

Vertices are always 0..n-1; edges are stored once as (u, v) with u < v.
The graph6 codec follows the de-facto format (6-bit packed upper triangle,
column-major, printable chars offset by 63) with the 4-byte extended header
for 63 <= n < 2**18.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import GeneratorError, GraphParseError

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) outside 0..{self.n - 1} or unordered")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for u, w in self.edges if v in (u, w))

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def label(self) -> str:
        return self.name if self.name else f"graph(n={self.n},m={self.m})"


def make_graph(n: int, edges, name: str | None = None) -> Graph:
    """Normalize an edge iterable (any orientation, duplicates ok) into a Graph."""
    canon = frozenset((min(u, v), max(u, v)) for u, v in edges)
    return Graph(n=n, edges=canon, name=name)


def adjacency(g: Graph) -> np.ndarray:
    """Dense symmetric 0/1 adjacency matrix with zero diagonal."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


# -- graph6 codec ------------------------------------------------------------


def _g6_check_printable(s: str):
    for i, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise GraphParseError(
                f"non-printable or out-of-range character {ch!r} at byte {i}"
            )


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise GraphParseError("empty graph6 string")
    _g6_check_printable(s)

    if ord(s[0]) == 126:  # extended header
        if len(s) >= 2 and ord(s[1]) == 126:
            raise GraphParseError(
                "8-byte graph6 header at byte 0: vertex counts >= 2**18 unsupported"
            )
        if len(s) < 4:
            raise GraphParseError(f"truncated extended header at byte {len(s)}")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
        offset0 = 4
        if n < 63:
            raise GraphParseError("malformed header byte: extended header for n < 63")
    else:
        n = ord(s[0]) - 63
        body = s[1:]
        offset0 = 1
    if n < 1:
        raise GraphParseError("malformed header byte: graphs need at least one vertex")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) < nchars:
        raise GraphParseError(
            f"truncated bit vector: need {nchars} chars, input ends at byte {offset0 + len(body)}"
        )
    if len(body) > nchars:
        raise GraphParseError(f"trailing data at byte {offset0 + nchars}")

    edges = set()
    bit = 0
    for j in range(1, n):
        for i in range(j):
            ch = ord(body[bit // 6]) - 63
            if (ch >> (5 - bit % 6)) & 1:
                edges.add((i, j))
            bit += 1
    return Graph(n=n, edges=frozenset(edges))


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 string."""
    if g.n <= 62:
        header = chr(g.n + 63)
    elif g.n < 2**18:
        header = "~" + "".join(
            chr(((g.n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    else:
        raise GraphParseError("vertex counts >= 2**18 unsupported")

    nbits = g.n * (g.n - 1) // 2
    bits = bytearray((nbits + 5) // 6)
    bit = 0
    for j in range(1, g.n):
        for i in range(j):
            if (i, j) in g.edges:
                bits[bit // 6] |= 1 << (5 - bit % 6)
            bit += 1
    return header + "".join(chr(b + 63) for b in bits)


# -- edge-list parser --------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse lines of "u v" (whitespace or comma separated, 0-based ids).

    An optional first line "n <count>" declares the vertex count; otherwise
    n = 1 + max vertex id. Duplicate edges collapse. Blank lines and lines
    starting with '#' are skipped.
    """
    declared_n = None
    edges = set()
    max_id = -1
    saw_data = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in re.split(r"[,\s]+", line) if t]
        if not saw_data and declared_n is None and tokens[0] == "n":
            if len(tokens) != 2:
                raise GraphParseError(f"line {lineno}: expected 'n <count>'")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise GraphParseError(f"line {lineno}: non-integer vertex count {tokens[1]!r}")
            if declared_n < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"line {lineno}: expected two vertex ids, got {len(tokens)} tokens")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer token in {line!r}")
        if u < 0 or v < 0:
            raise GraphParseError(f"line {lineno}: negative vertex id")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        saw_data = True
        max_id = max(max_id, u, v)
        edges.add((min(u, v), max(u, v)))

    if declared_n is None:
        if max_id < 0:
            raise GraphParseError("empty edge list and no 'n <count>' line")
        n = max_id + 1
    else:
        n = declared_n
        if max_id >= n:
            raise GraphParseError(f"vertex id {max_id} exceeds declared count {n}")
    return Graph(n=n, edges=frozenset(edges))


# -- named generators --------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise GeneratorError("complete(n) needs n >= 1")
    return make_graph(n, combinations(range(n), 2), name=f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError("cycle(n) needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GeneratorError("complete_bipartite(a, b) needs a, b >= 1")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return make_graph(a + b, edges, name=f"K{a},{b}")


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    subsets = list(combinations(range(5), 2))
    idx = {s: i for i, s in enumerate(subsets)}
    edges = [
        (idx[s], idx[t])
        for s, t in combinations(subsets, 2)
        if not set(s) & set(t)
    ]
    return make_graph(10, edges, name="petersen")


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit strings, adjacent iff Hamming distance is 1 or 4."""
    edges = []
    for u in range(16):
        for v in range(u + 1, 16):
            dist = bin(u ^ v).count("1")
            if dist in (1, 4):
                edges.append((u, v))
    return make_graph(16, edges, name="clebsch")


def circulant(n: int, connections) -> Graph:
    """Circulant graph on Z_n with the given (symmetrized) connection set."""
    conn = {s % n for s in connections} | {(-s) % n for s in connections}
    if 0 in conn:
        raise GeneratorError("circulant connection set must not contain 0 mod n")
    edges = [(i, (i + s) % n) for i in range(n) for s in conn]
    return make_graph(n, edges, name=f"circulant({n})")


def cyclotomic13() -> Graph:
    """Cubic-residue circulant on Z_13: connection set {1, 5, 8, 12}."""
    g = circulant(13, {1, 5, 8, 12})
    return Graph(n=g.n, edges=g.edges, name="cyclotomic13")


def gq24() -> Graph:
    """Point graph of the generalized quadrangle GQ(2,4) via the 27-lines model.

    Vertices: a_1..a_6, b_1..b_6, c_{ij} for 1 <= i < j <= 6.
    a_i ~ b_j iff i != j; a_i ~ c_{jk} and b_i ~ c_{jk} iff i in {j,k};
    c_{ij} ~ c_{kl} iff {i,j} and {k,l} are disjoint. Strongly regular
    (27, 10, 1, 5).
    """
    pairs = list(combinations(range(6), 2))
    c_idx = {p: 12 + t for t, p in enumerate(pairs)}
    edges = []
    for i in range(6):
        for j in range(6):
            if i != j:
                edges.append((i, 6 + j))
    for i in range(6):
        for (j, k), cid in c_idx.items():
            if i in (j, k):
                edges.append((i, cid))
                edges.append((6 + i, cid))
    for p, q in combinations(pairs, 2):
        if not set(p) & set(q):
            edges.append((c_idx[p], c_idx[q]))
    return make_graph(27, edges, name="gq24")


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with edges drawn from random.Random(seed); deterministic."""
    if n < 1:
        raise GeneratorError("erdos_renyi(n, p, seed) needs n >= 1")
    if not (0.0 <= p <= 1.0):
        raise GeneratorError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return make_graph(n, edges, name=f"gnp({n},{p},{seed})")


_FIXED_GENERATORS = {
    "petersen": petersen,
    "clebsch": clebsch,
    "cyclotomic13": cyclotomic13,
    "gq24": gq24,
}


def generate(spec: str, seed: int | None = None) -> Graph:
    """Build a named graph from "name" or "name:p1,p2,..." spec syntax.

    `seed` is the fallback for erdos_renyi when the spec string omits its own.
    """
    name, _, argstr = spec.partition(":")
    name = name.strip().lower()
    args = [a.strip() for a in argstr.split(",") if a.strip()] if argstr else []

    def intargs(k):
        if len(args) != k:
            raise GeneratorError(f"{name} takes {k} parameter(s), got {len(args)}")
        try:
            return [int(a) for a in args]
        except ValueError:
            raise GeneratorError(f"{name}: non-integer parameter in {args}")

    if name in _FIXED_GENERATORS:
        if args:
            raise GeneratorError(f"{name} takes no parameters")
        return _FIXED_GENERATORS[name]()
    if name == "complete":
        return complete(*intargs(1))
    if name == "cycle":
        return cycle(*intargs(1))
    if name == "complete_bipartite":
        return complete_bipartite(*intargs(2))
    if name == "circulant":
        if len(args) < 2:
            raise GeneratorError("circulant takes n plus a connection set")
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise GeneratorError(f"circulant: non-integer parameter in {args}")
        return circulant(vals[0], vals[1:])
    if name == "erdos_renyi":
        if len(args) not in (2, 3):
            raise GeneratorError("erdos_renyi takes n, p and an optional seed")
        try:
            n, p = int(args[0]), float(args[1])
            s = int(args[2]) if len(args) == 3 else (seed if seed is not None else 0)
        except ValueError:
            raise GeneratorError(f"erdos_renyi: bad parameters {args}")
        return erdos_renyi(n, p, s)
    raise GeneratorError(f"unknown generator {name!r}")
