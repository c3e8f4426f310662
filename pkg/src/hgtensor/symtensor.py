"""Canonical sparse storage for symmetric tensors.

A symmetric tensor of order m and dimension d is stored as a mapping from
canonical index keys (nondecreasing 1-based m-tuples) to the value held at
every position in that key's orbit.  Explicit zeros are never stored.  A key
with index multiplicities m_1..m_j occupies m!/(m_1! ... m_j!) distinct
positions of the dense tensor; that count is the multiplicity weight used to
convert between per-position values and orbit totals.

Values are exact ``fractions.Fraction`` everywhere except the
eigen-normalized adjacency variant, whose k-th roots force floats.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .hypergraph import Hypergraph

Key = tuple[int, ...]
Value = Fraction | float


def multiplicity_weight(key: Sequence[int]) -> int:
    """Number of distinct dense positions sharing this canonical key."""
    counts = Counter(key)
    weight = math.factorial(len(key))
    for c in counts.values():
        weight //= math.factorial(c)
    return weight


def _arrangements(key: Sequence[int]) -> int:
    """Distinct orderings of a multiset of indices."""
    total = math.factorial(len(key))
    for c in Counter(key).values():
        total //= math.factorial(c)
    return total


def format_value(v: Value) -> str:
    """Rationals as num/den (den 1 elided); floats with 12 significant digits."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    return f"{float(v):.12g}"


class SymTensor:
    """Order-m symmetric tensor over indices 1..dim, canonical sparse form."""

    __slots__ = ("order", "dim", "entries")

    def __init__(self, order: int, dim: int, entries: Mapping[Key, Value]):
        if order < 1:
            raise ValueError("tensor order must be at least 1")
        if dim < 0:
            raise ValueError("tensor dimension must be nonnegative")
        canonical: dict[Key, Value] = {}
        for key, value in entries.items():
            if len(key) != order:
                raise ValueError(f"key {key} does not have {order} indices")
            if any(not 1 <= i <= dim for i in key):
                raise ValueError(f"key {key} has an index outside [1, {dim}]")
            ck = tuple(sorted(key))
            if ck in canonical:
                raise ValueError(f"conflicting entries for canonical key {ck}")
            if value != 0:
                canonical[ck] = value
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", canonical)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SymTensor is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (
            self.order == other.order
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SymTensor(order={self.order}, dim={self.dim}, nnz_keys={len(self.entries)})"

    def get(self, index: Sequence[int]) -> Value:
        """Value at an arbitrary (not necessarily sorted) index tuple."""
        idx = tuple(index)
        if len(idx) != self.order:
            raise ValueError(f"index {idx} does not have {self.order} components")
        if any(not 1 <= i <= self.dim for i in idx):
            raise ValueError(f"index {idx} outside [1, {self.dim}]")
        return self.entries.get(tuple(sorted(idx)), Fraction(0))

    def canonical_items(self) -> Iterator[tuple[Key, Value]]:
        """Stored (key, value) pairs in lexicographic key order."""
        for key in sorted(self.entries):
            yield key, self.entries[key]

    def nnz_positions(self) -> int:
        """Count of nonzero dense positions (orbit sizes summed)."""
        return sum(multiplicity_weight(k) for k in self.entries)

    def slice_sum(self, i: int):
        """Sum of all dense entries whose first index is i.

        By symmetry this is also the sum over any fixed mode.
        """
        if not 1 <= i <= self.dim:
            raise ValueError(f"index {i} outside [1, {self.dim}]")
        total = Fraction(0)
        for key, value in self.entries.items():
            if i in key:
                rest = list(key)
                rest.remove(i)
                total += value * _arrangements(rest)
        return total

    def total_sum(self):
        """Sum of every dense entry."""
        total = Fraction(0)
        for key, value in self.entries.items():
            total += value * multiplicity_weight(key)
        return total

    def apply(self, x: Sequence) -> list:
        """Contract against a vector on the last m-1 modes.

        Component i is the sum over dense positions (i, i_2, ..., i_m) of
        value * x_{i_2} * ... * x_{i_m}.  Exact for rational inputs.
        """
        if len(x) != self.dim:
            raise ValueError(f"vector length {len(x)} does not match dim {self.dim}")
        out: list = [Fraction(0)] * self.dim
        for key in sorted(self.entries):
            value = self.entries[key]
            for i in sorted(set(key)):
                rest = list(key)
                rest.remove(i)
                prod = value * _arrangements(rest)
                for j in rest:
                    prod = prod * x[j - 1]
                out[i - 1] = out[i - 1] + prod
        return out

    def scale_add_identity(self, alpha: Value, beta: Value) -> SymTensor:
        """Return alpha * self + beta * I, with I the diagonal identity."""
        entries: dict[Key, Value] = {}
        if alpha != 0:
            for key, value in self.entries.items():
                entries[key] = alpha * value
        if beta != 0:
            for j in range(1, self.dim + 1):
                diag = (j,) * self.order
                entries[diag] = entries.get(diag, Fraction(0)) + beta
        return SymTensor(self.order, self.dim, entries)

    def to_coo(self) -> str:
        """COO text: header then one line per canonical key, lexicographic."""
        lines = [f"symtensor v1 order={self.order} dim={self.dim}"]
        for key, value in self.canonical_items():
            lines.append(" ".join(str(i) for i in key) + " " + format_value(value))
        return "\n".join(lines) + "\n"


def _uniform_cardinality(hk: Hypergraph, k: int | None) -> int:
    sizes = {len(e) for e in hk.edges}
    if len(sizes) > 1:
        raise ValueError("hypergraph is not uniform")
    if sizes:
        inferred = sizes.pop()
        if k is not None and k != inferred:
            raise ValueError(f"hypergraph is {inferred}-uniform, not {k}-uniform")
        return inferred
    if k is None:
        raise ValueError("edgeless hypergraph: the uniform cardinality must be given")
    return k


def layer_tensor_raw(hk: Hypergraph, k: int | None = None) -> SymTensor:
    """Order-k tensor with value 1 at each edge's canonical key."""
    k = _uniform_cardinality(hk, k)
    entries = {tuple(sorted(e)): Fraction(1) for e in hk.edges}
    return SymTensor(k, hk.n, entries)


def layer_tensor_degree_normalized(hk: Hypergraph, k: int | None = None) -> SymTensor:
    """Order-k tensor with value 1/(k-1)! at each edge's canonical key.

    Normalized so that each mode-i slice sums to the degree of vertex i.
    """
    k = _uniform_cardinality(hk, k)
    value = Fraction(1, math.factorial(k - 1))
    entries = {tuple(sorted(e)): value for e in hk.edges}
    return SymTensor(k, hk.n, entries)


def layer_tensor_eigen_normalized(hk: Hypergraph, k: int | None = None) -> SymTensor:
    """Degree-normalized variant scaled by the product of d_i^(-1/k).

    Degrees are taken within ``hk`` itself.  The k-th roots make the entries
    floating point; vertices of degree zero never occur in a stored key.
    """
    k = _uniform_cardinality(hk, k)
    deg = [0] * hk.n
    for e in hk.edges:
        for v in e:
            deg[v - 1] += 1
    base = 1.0 / math.factorial(k - 1)
    entries: dict[Key, float] = {}
    for e in hk.edges:
        key = tuple(sorted(e))
        value = base
        for i in key:
            value *= deg[i - 1] ** (-1.0 / k)
        entries[key] = value
    return SymTensor(k, hk.n, entries)


def laplacian(a: SymTensor, degree_seq: Sequence[int]) -> SymTensor:
    """I_deg - a, where I_deg has diagonal 1 exactly at positive-degree indices."""
    if len(degree_seq) != a.dim:
        raise ValueError(f"need {a.dim} degrees, got {len(degree_seq)}")
    if any(d < 0 for d in degree_seq):
        raise ValueError("degrees must be nonnegative")
    entries: dict[Key, Value] = {key: -value for key, value in a.entries.items()}
    for j, d in enumerate(degree_seq, start=1):
        if d > 0:
            diag = (j,) * a.order
            entries[diag] = entries.get(diag, Fraction(0)) + 1
    return SymTensor(a.order, a.dim, entries)
