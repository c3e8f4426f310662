"""Make a general hypergraph uniform and read facts back off its tensor.

A hypergraph with edge cardinalities up to k_max gains k_max - 1 special
vertices, indexed n+1..n+k_max-1.  Every edge of size s is padded with the
suffix {n+s, ..., n+k_max-1}, which records s in the padded edge itself and
makes the construction reversible.  The iterative route builds the same
family by augmenting and merging the weighted cardinality layers one step at
a time; both routes feed the symmetric e-adjacency tensor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hypergraph import Hypergraph, WeightedHypergraph
from .layers import decompose
from .symtensor import SymTensor

CoefficientPolicy = str | Sequence[Fraction]


def layer_coefficients(policy: CoefficientPolicy, k_max: int) -> tuple[Fraction, ...]:
    """Per-cardinality weights c_1..c_k_max attached to the layers.

    ``"unit"`` takes every c_k = 1.  ``"handshake"`` takes c_k = k_max/k,
    which makes the tensor's total weight count each edge k_max times, the
    way every graph edge is counted twice in a degree sum.  An explicit
    sequence of k_max positive rationals is accepted as-is.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if isinstance(policy, str):
        if policy == "unit":
            return (Fraction(1),) * k_max
        if policy == "handshake":
            return tuple(Fraction(k_max, k) for k in range(1, k_max + 1))
        raise ValueError(f"unknown coefficient policy {policy!r}")
    coefficients = tuple(Fraction(c) for c in policy)
    if len(coefficients) != k_max:
        raise ValueError(f"need {k_max} coefficients, got {len(coefficients)}")
    if any(c <= 0 for c in coefficients):
        raise ValueError("coefficients must be positive")
    return coefficients


def special_vertex_indices(n: int, k_max: int) -> tuple[int, ...]:
    """The padding vertex indices n+1..n+k_max-1, in augmentation order."""
    if n < 0 or k_max < 1:
        raise ValueError("need n >= 0 and k_max >= 1")
    return tuple(range(n + 1, n + k_max))


def _uniform_size(hw: WeightedHypergraph) -> int | None:
    sizes = {len(e) for e in hw.base.edges}
    if len(sizes) > 1:
        raise ValueError("hypergraph is not uniform")
    return sizes.pop() if sizes else None


def vertex_augment(hw: WeightedHypergraph, y: int) -> WeightedHypergraph:
    """Adjoin the fresh vertex y to the vertex set and to every edge.

    A k-uniform weighted hypergraph becomes (k+1)-uniform; weights are kept.
    """
    _uniform_size(hw)
    n = hw.base.n
    if y <= n:
        raise ValueError(f"vertex {y} is already present")
    if y != n + 1:
        raise ValueError(f"augmenting vertex must be the next index {n + 1}, got {y}")
    edges = tuple(e | {y} for e in hw.base.edges)
    return WeightedHypergraph(Hypergraph(n + 1, edges), hw.weights)


def merge(a: WeightedHypergraph, b: WeightedHypergraph) -> WeightedHypergraph:
    """Union of two k-uniform weighted hypergraphs with disjoint edge families.

    Each edge keeps the weight it had in its operand; the vertex set is the
    union of the operands' vertex sets.
    """
    size_a = _uniform_size(a)
    size_b = _uniform_size(b)
    if size_a is not None and size_b is not None and size_a != size_b:
        raise ValueError(f"cannot merge {size_a}-uniform with {size_b}-uniform")
    if set(a.base.edges) & set(b.base.edges):
        raise ValueError("edge families must be disjoint")
    n = max(a.base.n, b.base.n)
    edges = a.base.edges + b.base.edges
    weights = a.weights + b.weights
    return WeightedHypergraph(Hypergraph(n, edges), weights)


@dataclass(frozen=True)
class LayeredUniform:
    """The k_max-uniform weighted hypergraph produced by padding the layers.

    ``origin[j]`` is the 1-based id of the original edge that produced
    uniform edge j+1, so the construction stays explicitly reversible.
    """

    uniform: WeightedHypergraph
    n_original: int
    k_max: int
    origin: tuple[int, ...]

    @property
    def special_vertices(self) -> tuple[int, ...]:
        return special_vertex_indices(self.n_original, self.k_max)


def layered_uniform(h: Hypergraph, policy: CoefficientPolicy = "handshake") -> LayeredUniform:
    """Uniformize by iterated augment-and-merge over the cardinality layers.

    Start from the weighted 1-cardinality layer; at step k, augment the
    running k-uniform result by the fresh vertex n+k and merge in the
    (k+1)-cardinality layer.  After k_max - 1 steps every original edge of
    size s has become e + {n+s, ..., n+k_max-1} with weight c_s.
    """
    dec = decompose(h)
    coefficients = layer_coefficients(policy, dec.k_max)

    def weighted_layer(k: int) -> tuple[WeightedHypergraph, list[int]]:
        layer = dec.layer(k)
        ids = [i for i, e in enumerate(h.edges, start=1) if len(e) == k]
        return WeightedHypergraph(layer, (coefficients[k - 1],) * layer.p), ids

    current, origin = weighted_layer(1)
    for k in range(1, dec.k_max):
        current = vertex_augment(current, h.n + k)
        nxt, nxt_ids = weighted_layer(k + 1)
        current = merge(current, nxt)
        origin.extend(nxt_ids)
    return LayeredUniform(current, h.n, dec.k_max, tuple(origin))


def tensor_from_layered_uniform(lu: LayeredUniform) -> SymTensor:
    """Expand a padded uniform family into its symmetric tensor.

    An edge whose original part has size s contributes its canonical key
    with value w * s / k_max!; under the handshake policy every value is
    1/(k_max-1)!.
    """
    k = lu.k_max
    entries: dict[tuple[int, ...], Fraction] = {}
    for e, w in zip(lu.uniform.base.edges, lu.uniform.weights):
        original_size = sum(1 for i in e if i <= lu.n_original)
        key = tuple(sorted(e))
        entries[key] = w * Fraction(original_size, math.factorial(k))
    return SymTensor(k, lu.uniform.base.n, entries)


def e_adjacency_tensor(h: Hypergraph) -> SymTensor:
    """Symmetric order-k_max tensor encoding all of h in one object.

    Every edge e of size s occupies the single canonical key
    sorted(e) + (n+s, ..., n+k_max-1) with value 1/(k_max-1)!.
    """
    if h.p == 0:
        raise ValueError("cannot build a tensor for a hypergraph with no edges")
    k = h.k_max
    value = Fraction(1, math.factorial(k - 1))
    entries: dict[tuple[int, ...], Fraction] = {}
    for e in h.edges:
        key = tuple(sorted(e)) + tuple(range(h.n + len(e), h.n + k))
        entries[key] = value
    return SymTensor(k, h.n + k - 1, entries)


def _as_int(value, what: str) -> int:
    as_fraction = Fraction(value)
    if as_fraction.denominator != 1 or as_fraction < 0:
        raise ValueError(f"{what} is {value}, not a nonnegative integer")
    return int(as_fraction)


def vertex_degrees_from_tensor(t: SymTensor, n: int) -> tuple[int, ...]:
    """Original vertex degrees, read as the first n slice sums."""
    if not 0 <= n <= t.dim:
        raise ValueError(f"original vertex count {n} outside [0, {t.dim}]")
    return tuple(_as_int(t.slice_sum(i), f"slice sum {i}") for i in range(1, n + 1))


def layer_counts_from_tensor(t: SymTensor, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cumulative and per-size edge counts read off the special slices.

    Returns (cumulative, per_size), both indexed by cardinality 1..k_max:
    cumulative[j-1] counts edges of size <= j.  The last cumulative value is
    the edge count, recovered as total_sum / k_max since no slice carries it.
    """
    k = t.order
    if t.dim != n + k - 1:
        raise ValueError(f"tensor dim {t.dim} does not match n={n}, order {k}")
    cumulative = [_as_int(t.slice_sum(n + i), f"slice sum {n + i}") for i in range(1, k)]
    total = t.total_sum()
    cumulative.append(_as_int(Fraction(total) / k, "total_sum / order"))
    per_size = []
    previous = 0
    for j, c in enumerate(cumulative, start=1):
        if c < previous:
            raise ValueError(f"cumulative counts decrease at cardinality {j}")
        per_size.append(c - previous)
        previous = c
    return tuple(cumulative), tuple(per_size)


def reconstruct(t: SymTensor, n: int) -> Hypergraph:
    """Invert e_adjacency_tensor: drop the padding suffix from every key.

    Each canonical key must consist of distinct indices whose part above n
    is exactly the suffix {n+s, ..., n+k_max-1} for s the size of the part
    at or below n; anything else is rejected.
    """
    k = t.order
    if t.dim != n + k - 1:
        raise ValueError(f"tensor dim {t.dim} does not match n={n}, order {k}")
    edges = []
    for key, _ in t.canonical_items():
        if len(set(key)) != len(key):
            raise ValueError(f"key {key} repeats an index")
        original = tuple(i for i in key if i <= n)
        padding = tuple(i for i in key if i > n)
        if not original:
            raise ValueError(f"key {key} has no original vertices")
        expected = tuple(range(n + len(original), n + k))
        if padding != expected:
            raise ValueError(
                f"key {key} has padding {padding}, expected {expected}"
            )
        edges.append(frozenset(original))
    return Hypergraph(n, tuple(edges))
