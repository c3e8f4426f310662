"""Eigenpair checking, localization disks, degree bounds, and power iteration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hypergraph import Hypergraph, adjacency_matrix_bretto, degrees
from .symtensor import SymTensor, _arrangements
from .uniformize import e_adjacency_tensor


@dataclass(frozen=True)
class EigenCheck:
    residual: Fraction | float
    threshold: Fraction | float
    passed: bool


def check_eigenpair(t: SymTensor, value, x: Sequence, tol=0) -> EigenCheck:
    """Verify (value, x) against the componentwise eigen equations.

    Component i must satisfy (t x^{m-1})_i = value * x_i^{m-1}; the check
    passes when the largest residual is at most tol * (1 + |value|).  With
    rational inputs and tol = 0 this is an exact test.
    """
    contracted = t.apply(x)
    residual = max(
        (abs(contracted[i] - value * x[i] ** (t.order - 1)) for i in range(t.dim)),
        default=Fraction(0),
    )
    threshold = tol * (1 + abs(value))
    return EigenCheck(residual, threshold, residual <= threshold)


def gershgorin_disks(t: SymTensor) -> tuple[tuple[Fraction | float, Fraction | float], ...]:
    """Per-index (center, radius): the diagonal entry and its off-diagonal slice mass."""
    diagonal = {}
    radii = [Fraction(0)] * t.dim
    for key, value in t.entries.items():
        first = key[0]
        if all(i == first for i in key):
            diagonal[first] = value
            continue
        for i in sorted(set(key)):
            rest = list(key)
            rest.remove(i)
            radii[i - 1] += abs(value) * _arrangements(rest)
    disks = []
    for i in range(1, t.dim + 1):
        disks.append((diagonal.get(i, Fraction(0)), radii[i - 1]))
    return tuple(disks)


@dataclass(frozen=True)
class BoundReport:
    """Degree data bounding every eigenvalue modulus of the layered tensor."""

    delta: int
    delta_star: int
    bound: int
    disks: tuple[tuple[Fraction | float, Fraction | float], ...]


def spectral_bound(h: Hypergraph) -> BoundReport:
    """max(Delta, Delta*) for the layered tensor of h.

    Delta is the largest vertex degree; Delta* is the largest padding-vertex
    degree, i.e. the largest count of edges of size <= i over
    i = 1..k_max - 1.  Every disk radius is one of these degrees, so the
    bound dominates all Gershgorin disks.
    """
    if h.p == 0:
        raise ValueError("the bound needs at least one edge")
    delta = max(degrees(h), default=0)
    k = h.k_max
    delta_star = 0
    for i in range(1, k):
        delta_star = max(delta_star, sum(1 for e in h.edges if len(e) <= i))
    return BoundReport(
        delta=delta,
        delta_star=delta_star,
        bound=max(delta, delta_star),
        disks=gershgorin_disks(e_adjacency_tensor(h)),
    )


@dataclass(frozen=True)
class EigenPair:
    """Result of the bracketed power iteration.

    ``value`` is the midpoint of the final ratio bracket; ``converged`` says
    whether the bracket closed within tolerance before the iteration cap.
    """

    value: float
    vector: tuple[float, ...]
    residual: float
    iterations: int
    converged: bool
    bracket_low: float
    bracket_high: float


def power_iteration(t: SymTensor, tol: float = 1e-10, max_iter: int = 10000) -> EigenPair:
    """Dominant eigenvalue of a nonnegative symmetric tensor, with brackets.

    Starts from the all-ones vector on the support (indices with a nonzero
    slice; zero-slice indices stay pinned at 0) and repeats
    x <- normalize((t x^{m-1})^{1/(m-1)}).  At each step the componentwise
    ratios (t x^{m-1})_i / x_i^{m-1} bracket the dominant eigenvalue from
    below and above; iteration stops when the bracket is narrower than tol.
    Reducible inputs may stall with an open bracket, which is reported via
    ``converged`` rather than raised.
    """
    m = t.order
    if m < 2:
        raise ValueError("power iteration needs a tensor of order at least 2")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if any(v < 0 for v in t.entries.values()):
        raise ValueError("power iteration needs a nonnegative tensor")
    support = sorted({i for key in t.entries for i in key})
    if not support:
        raise ValueError("power iteration needs a nonzero tensor")

    x = [0.0] * t.dim
    for i in support:
        x[i - 1] = 1.0
    converged = False
    iterations = 0
    low = high = 0.0
    while True:
        contracted = [float(v) for v in t.apply(x)]
        ratios = [contracted[i - 1] / x[i - 1] ** (m - 1) for i in support]
        low, high = min(ratios), max(ratios)
        iterations += 1
        if high - low <= tol:
            converged = True
            break
        if iterations >= max_iter:
            break
        nxt = [0.0] * t.dim
        for i in support:
            nxt[i - 1] = contracted[i - 1] ** (1.0 / (m - 1))
        top = max(nxt)
        nxt = [v / top for v in nxt]
        if min(nxt[i - 1] for i in support) < 1e-300:
            # a support component underflowed: the bracket cannot improve
            break
        x = nxt

    value = (low + high) / 2.0
    residual = max(
        abs(contracted[i] - value * x[i] ** (m - 1)) for i in range(t.dim)
    )
    return EigenPair(
        value=value,
        vector=tuple(x),
        residual=residual,
        iterations=iterations,
        converged=converged,
        bracket_low=low,
        bracket_high=high,
    )


@dataclass(frozen=True)
class GraphCaseReport:
    """Agreement checks between a graph's matrix view and its layered tensor."""

    c2: Fraction
    block_ok: bool
    graph_value: float
    layered_value: float
    graph_converged: bool
    layered_converged: bool
    relation_ok: bool
    zero_eigenpair_ok: bool


def graph_consistency_check(g: Hypergraph, tol: float = 1e-8) -> GraphCaseReport:
    """For a 2-uniform hypergraph, confirm the layered tensor is the bordered matrix.

    The order-2 layered tensor must look like [[c_2 A, 0], [0, 0]] with A the
    shared-edge adjacency matrix and c_2 = 1 under the handshake policy, its
    dominant eigenvalue must be c_2 times the matrix one, and the padding
    axis must carry an exact zero eigenpair.
    """
    if g.p == 0 or any(len(e) != 2 for e in g.edges):
        raise ValueError("graph consistency check needs a 2-uniform hypergraph with edges")
    n = g.n
    t = e_adjacency_tensor(g)
    a = adjacency_matrix_bretto(g)
    c2 = Fraction(1)

    block_ok = True
    for u in range(1, n + 1):
        for v in range(u, n + 1):
            if t.get((u, v)) != c2 * a[u - 1][v - 1]:
                block_ok = False
    for i in range(1, n + 2):
        if t.get((i, n + 1)) != 0:
            block_ok = False

    matrix_entries = {}
    for u in range(1, n + 1):
        for v in range(u, n + 1):
            if a[u - 1][v - 1] != 0:
                matrix_entries[(u, v)] = a[u - 1][v - 1]
    graph_pair = power_iteration(SymTensor(2, n, matrix_entries))
    layered_pair = power_iteration(t)
    relation_ok = (
        graph_pair.converged
        and layered_pair.converged
        and abs(layered_pair.value - float(c2) * graph_pair.value) <= tol
    )

    axis = [Fraction(0)] * (n + 1)
    axis[n] = Fraction(1)
    zero_ok = check_eigenpair(t, Fraction(0), axis, 0).passed

    return GraphCaseReport(
        c2=c2,
        block_ok=block_ok,
        graph_value=graph_pair.value,
        layered_value=layered_pair.value,
        graph_converged=graph_pair.converged,
        layered_converged=layered_pair.converged,
        relation_ok=relation_ok,
        zero_eigenpair_ok=zero_ok,
    )
