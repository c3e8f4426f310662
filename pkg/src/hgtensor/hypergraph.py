"""General hypergraphs: construction, parsing, and classical matrix views."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Iterable

Edge = frozenset[int]
Matrix = list[list[Fraction]]


def _as_edge(vertices: Iterable[int], n: int) -> Edge:
    edge = frozenset(vertices)
    if not edge:
        raise ValueError("hyperedge must contain at least one vertex")
    for v in edge:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex index must be an integer, got {v!r}")
        if not 1 <= v <= n:
            raise ValueError(f"vertex index {v} out of range [1, {n}]")
    return edge


@dataclass(frozen=True)
class Hypergraph:
    """A finite hypergraph on vertices 1..n with a duplicate-free edge family.

    Edge identifiers are 1-based positions in ``edges``.  Isolated vertices
    and the edgeless hypergraph are allowed; empty edges are not.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = tuple(_as_edge(e, self.n) for e in self.edges)
        if len(set(normalized)) != len(normalized):
            raise ValueError("duplicate hyperedge in edge family")
        object.__setattr__(self, "edges", normalized)

    @property
    def p(self) -> int:
        return len(self.edges)

    @property
    def k_max(self) -> int:
        """Largest edge cardinality; 0 for the edgeless hypergraph."""
        return max((len(e) for e in self.edges), default=0)


@dataclass(frozen=True)
class WeightedHypergraph:
    """A hypergraph with a strictly positive rational weight per edge."""

    base: Hypergraph
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        weights = tuple(Fraction(w) for w in self.weights)
        if len(weights) != self.base.p:
            raise ValueError("need exactly one weight per hyperedge")
        if any(w <= 0 for w in weights):
            raise ValueError("edge weights must be positive")
        object.__setattr__(self, "weights", weights)


def unit_weights(h: Hypergraph) -> WeightedHypergraph:
    return WeightedHypergraph(h, (Fraction(1),) * h.p)


def parse_hypergraph(source: str | IO[str]) -> Hypergraph:
    """Parse the HG v1 text format.

    Lines starting with ``#`` and blank lines are not significant.  The first
    significant line is the vertex count n; every later significant line is
    one hyperedge given as distinct vertex indices in [1, n].
    """
    text = source if isinstance(source, str) else source.read()
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise ValueError(f"line {lineno}: header must be a single integer")
            try:
                n = int(tokens[0])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed vertex count {tokens[0]!r}") from None
            if n < 0:
                raise ValueError(f"line {lineno}: vertex count must be nonnegative")
            continue
        try:
            vertices = [int(t) for t in tokens]
        except ValueError:
            raise ValueError(f"line {lineno}: malformed vertex index") from None
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"line {lineno}: duplicate vertex within hyperedge")
        try:
            edges.append(_as_edge(vertices, n))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing header: expected a vertex count line")
    try:
        return Hypergraph(n, tuple(edges))
    except ValueError as exc:
        raise ValueError(str(exc)) from None


def degree(h: Hypergraph, v: int) -> int:
    """Number of hyperedges containing vertex v."""
    _check_vertex(h, v)
    return sum(1 for e in h.edges if v in e)


def degrees(h: Hypergraph) -> tuple[int, ...]:
    return tuple(degree(h, v) for v in range(1, h.n + 1))


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 1 <= v <= h.n:
        raise ValueError(f"vertex index {v} out of range [1, {h.n}]")


def incidence_matrix(h: Hypergraph) -> Matrix:
    """n x p matrix with entry 1 exactly when vertex v lies in edge e."""
    one, zero = Fraction(1), Fraction(0)
    return [[one if v in e else zero for e in h.edges] for v in range(1, h.n + 1)]


def adjacency_matrix_bretto(h: Hypergraph) -> Matrix:
    """Symmetric n x n matrix counting shared edges; zero diagonal."""
    a = [[Fraction(0)] * h.n for _ in range(h.n)]
    for e in h.edges:
        members = sorted(e)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                a[u - 1][v - 1] += 1
                a[v - 1][u - 1] += 1
    return a


def adjacency_matrix_zhou(hw: WeightedHypergraph) -> Matrix:
    """Weighted adjacency H W H^T - D_v, with D_v the weighted degree diagonal.

    Built from the actual matrix product so that it cross-checks the direct
    counting construction rather than repeating it.
    """
    h = hw.base
    inc = incidence_matrix(h)
    hw_prod = [[inc[v][j] * hw.weights[j] for j in range(h.p)] for v in range(h.n)]
    a = [
        [sum((hw_prod[u][j] * inc[v][j] for j in range(h.p)), Fraction(0)) for v in range(h.n)]
        for u in range(h.n)
    ]
    for v in range(h.n):
        weighted_degree = sum((w for e, w in zip(h.edges, hw.weights) if v + 1 in e), Fraction(0))
        a[v][v] -= weighted_degree
    return a


def two_section(h: Hypergraph) -> Hypergraph:
    """Graph on the same vertices joining every pair co-resident in some edge."""
    pairs: set[Edge] = set()
    for e in h.edges:
        members = sorted(e)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                pairs.add(frozenset((u, v)))
    ordered = sorted(pairs, key=sorted)
    return Hypergraph(h.n, tuple(ordered))


def is_k_adjacent(h: Hypergraph, vertices: Iterable[int]) -> bool:
    """True when the given distinct vertices all lie together in some edge."""
    s = frozenset(vertices)
    if not s:
        raise ValueError("vertex set must be nonempty")
    for v in s:
        _check_vertex(h, v)
    return any(s <= e for e in h.edges)


def is_e_adjacent(h: Hypergraph, vertices: Iterable[int]) -> bool:
    """True when the given vertex set is exactly one of the hyperedges."""
    s = frozenset(vertices)
    if not s:
        raise ValueError("vertex set must be nonempty")
    for v in s:
        _check_vertex(h, v)
    return s in set(h.edges)
