"""The classical all-positions tensor of a general hypergraph, for comparison.

An edge of size s is spread over every order-k_max position that uses each
of its vertices at least once, with the constant value s/alpha(k_max, s);
alpha counts those positions, so each incident edge contributes exactly 1
to a vertex's slice sum.  No extra vertices are introduced, at the price of
size-dependent entry values and a denser tensor.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .hypergraph import Hypergraph
from .symtensor import SymTensor
from .uniformize import e_adjacency_tensor


@lru_cache(maxsize=None)
def partitions_count(m: int, s: int) -> int:
    """Number of partitions of m into exactly s positive parts.

    Satisfies p_s(m) = p_s(m - s) + p_{s-1}(m - 1), with p_0(0) = 1,
    p_0(m) = 0 for m > 0, and p_s(m) = 0 for s > m.
    """
    if m < 0 or s < 0:
        return 0
    if s == 0:
        return 1 if m == 0 else 0
    if s > m:
        return 0
    return partitions_count(m - s, s) + partitions_count(m - 1, s - 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of ``parts`` positive integers summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def banerjee_alpha(k_max: int, s: int) -> int:
    """Positions an s-vertex edge occupies in an order-k_max tensor.

    Computed as the composition sum over (k_1, ..., k_s) positive with sum
    k_max of the multinomial k_max!/(k_1! ... k_s!); this equals the number
    of surjections from k_max slots onto s labels.
    """
    if not 1 <= s <= k_max:
        raise ValueError(f"need 1 <= s <= k_max, got s={s}, k_max={k_max}")
    total = 0
    k_factorial = math.factorial(k_max)
    for composition in _compositions(k_max, s):
        term = k_factorial
        for part in composition:
            term //= math.factorial(part)
        total += term
    return total


def banerjee_tensor(h: Hypergraph) -> SymTensor:
    """Order-k_max tensor over the original n vertices only.

    Each edge of size s holds value s/alpha(k_max, s) at every canonical key
    using all of its vertices; distinct edges cannot share a key since the
    key's support identifies the edge.
    """
    if h.p == 0:
        raise ValueError("cannot build a tensor for a hypergraph with no edges")
    k = h.k_max
    entries: dict[tuple[int, ...], Fraction] = {}
    for e in h.edges:
        members = sorted(e)
        s = len(members)
        value = Fraction(s, banerjee_alpha(k, s))
        for composition in _compositions(k, s):
            key_parts = []
            for vertex, repeats in zip(members, composition):
                key_parts.extend([vertex] * repeats)
            entries[tuple(key_parts)] = value
    return SymTensor(k, h.n, entries)


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side cost and shape figures for the two tensor models."""

    order: int
    layered_dim: int
    banerjee_dim: int
    layered_total_elements: int
    banerjee_total_elements: int
    layered_nnz_positions: int
    banerjee_nnz_positions: int
    layered_describe_count: int
    banerjee_describe_count: int
    layered_entry_value: Fraction
    banerjee_entry_values: dict[int, Fraction]


def compare_tensors(h: Hypergraph) -> ComparisonReport:
    """Measure both tensors of h and collect the headline numbers.

    The describe count is the number of independent values needed to write
    the tensor down: one per edge for the layered model, one per partition
    shape of k_max into edge-size parts for the all-positions model.
    """
    layered = e_adjacency_tensor(h)
    rival = banerjee_tensor(h)
    k = h.k_max
    size_counts = Counter(len(e) for e in h.edges)
    describe = sum(partitions_count(k, s) * c for s, c in size_counts.items())
    return ComparisonReport(
        order=k,
        layered_dim=layered.dim,
        banerjee_dim=rival.dim,
        layered_total_elements=layered.dim**k,
        banerjee_total_elements=rival.dim**k,
        layered_nnz_positions=layered.nnz_positions(),
        banerjee_nnz_positions=rival.nnz_positions(),
        layered_describe_count=h.p,
        banerjee_describe_count=describe,
        layered_entry_value=Fraction(1, math.factorial(k - 1)),
        banerjee_entry_values={
            s: Fraction(s, banerjee_alpha(k, s)) for s in sorted(size_counts)
        },
    )
