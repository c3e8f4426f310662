"""Homogeneous polynomials attached to symmetric tensors.

The variables are numbered like tensor indices: 1..n are original-vertex
variables (written z_i), anything above n is a padding variable (written
y_j for index n+j).  A symmetric tensor and its polynomial determine each
other through the multiplicity weight of each canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .hypergraph import Hypergraph
from .layers import decompose
from .symtensor import SymTensor, layer_tensor_degree_normalized, multiplicity_weight
from .uniformize import CoefficientPolicy, layer_coefficients

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class HomogeneousPolynomial:
    """A homogeneous polynomial as a map from sorted variable tuples to coefficients.

    Every monomial key has exactly ``degree`` entries (repeats allowed) drawn
    from 1..var_count; zero coefficients are dropped, so the zero polynomial
    is the empty map.
    """

    degree: int
    var_count: int
    monomials: dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("polynomial degree must be at least 1")
        if self.var_count < 0:
            raise ValueError("variable count must be nonnegative")
        canonical: dict[Monomial, Fraction] = {}
        for key, coefficient in self.monomials.items():
            if len(key) != self.degree:
                raise ValueError(f"monomial {key} does not have degree {self.degree}")
            if any(not 1 <= i <= self.var_count for i in key):
                raise ValueError(f"monomial {key} uses a variable outside [1, {self.var_count}]")
            ck = tuple(sorted(key))
            if ck in canonical:
                raise ValueError(f"conflicting coefficients for monomial {ck}")
            coefficient = Fraction(coefficient)
            if coefficient != 0:
                canonical[ck] = coefficient
        object.__setattr__(self, "monomials", canonical)

    def evaluate(self, xs: Sequence) -> Fraction:
        """Value at the point xs (exact for rational input)."""
        if len(xs) != self.var_count:
            raise ValueError(f"need {self.var_count} values, got {len(xs)}")
        total = Fraction(0)
        for key in sorted(self.monomials):
            term = self.monomials[key]
            for i in key:
                term = term * xs[i - 1]
            total = total + term
        return total

    def scaled(self, c: Fraction) -> HomogeneousPolynomial:
        c = Fraction(c)
        return HomogeneousPolynomial(
            self.degree, self.var_count, {k: c * v for k, v in self.monomials.items()}
        )


def poly_from_tensor(t: SymTensor) -> HomogeneousPolynomial:
    """The polynomial whose coefficient on each key is value * orbit size."""
    monomials = {key: value * multiplicity_weight(key) for key, value in t.entries.items()}
    return HomogeneousPolynomial(t.order, t.dim, monomials)


def tensor_from_poly(p: HomogeneousPolynomial) -> SymTensor:
    """Inverse of poly_from_tensor for polynomials with all-distinct variables.

    Each monomial must use ``degree`` distinct variables; its coefficient is
    spread evenly over the degree! positions of the canonical key.
    """
    entries: dict[Monomial, Fraction] = {}
    for key, coefficient in p.monomials.items():
        if len(set(key)) != len(key):
            raise ValueError(f"monomial {key} repeats a variable; cannot form a sparse key")
        entries[key] = coefficient / multiplicity_weight(key)
    return SymTensor(p.degree, p.var_count, entries)


def homogenize_step(
    r: HomogeneousPolynomial,
    p_next: HomogeneousPolynomial,
    c_next: Fraction,
    y_index: int,
) -> HomogeneousPolynomial:
    """One homogenization round: multiply r by a fresh variable, add c * p_next.

    ``y_index`` must be the next free variable index; ``p_next`` has degree
    r.degree + 1 and uses only variables that already exist.
    """
    if y_index <= r.var_count:
        raise ValueError(f"variable {y_index} collides with an existing variable")
    if y_index != r.var_count + 1:
        raise ValueError(f"fresh variable must be {r.var_count + 1}, got {y_index}")
    if p_next.degree != r.degree + 1:
        raise ValueError(
            f"expected a polynomial of degree {r.degree + 1}, got {p_next.degree}"
        )
    if p_next.var_count > r.var_count:
        raise ValueError("p_next may only use variables that already exist")
    c_next = Fraction(c_next)
    if c_next <= 0:
        raise ValueError("layer coefficient must be positive")
    monomials: dict[Monomial, Fraction] = {
        key + (y_index,): coefficient for key, coefficient in r.monomials.items()
    }
    for key, coefficient in p_next.monomials.items():
        monomials[key] = c_next * coefficient
    return HomogeneousPolynomial(r.degree + 1, r.var_count + 1, monomials)


def hypergraph_polynomial(
    h: Hypergraph, policy: CoefficientPolicy = "handshake"
) -> HomogeneousPolynomial:
    """Homogenized polynomial of the whole hypergraph.

    Starts from c_1 times the degree-normalized layer-1 polynomial and folds
    in each further layer with one homogenization round, so the result has
    degree k_max over n + k_max - 1 variables and carries exactly one
    monomial per hyperedge.
    """
    dec = decompose(h)
    coefficients = layer_coefficients(policy, dec.k_max)
    r = poly_from_tensor(layer_tensor_degree_normalized(dec.layer(1), 1)).scaled(coefficients[0])
    for k in range(1, dec.k_max):
        p_next = poly_from_tensor(layer_tensor_degree_normalized(dec.layer(k + 1), k + 1))
        r = homogenize_step(r, p_next, coefficients[k], h.n + k)
    return r


def _boolean_monomials(t: SymTensor, n: int) -> dict[Monomial, int]:
    """Keys of t with every coefficient replaced by 1."""
    k = t.order
    if t.dim != n + k - 1:
        raise ValueError(f"tensor dim {t.dim} does not match n={n}, order {k}")
    out: dict[Monomial, int] = {}
    for key in t.entries:
        if len(set(key)) != len(key):
            raise ValueError(f"key {key} repeats an index")
        out[key] = 1
    return out


def _partial_padding_evaluation(
    monomials: Mapping[Monomial, int], n: int, zeros: int
) -> dict[Monomial, int]:
    """Set the first ``zeros`` padding variables to 0 and the rest to 1.

    Returns the surviving original-variable monomials with their summed
    coefficients; a monomial survives exactly when it touches none of the
    zeroed padding variables.
    """
    out: dict[Monomial, int] = {}
    for key, coefficient in monomials.items():
        padding = [i - n for i in key if i > n]
        if any(j <= zeros for j in padding):
            continue
        zpart = tuple(i for i in key if i <= n)
        out[zpart] = out.get(zpart, 0) + coefficient
    return out


def dnf_extract(t: SymTensor, n: int, size: int) -> set[frozenset[int]]:
    """Edges of the given size, recovered by differencing 0/1 padding settings.

    With the first size-1 padding variables zeroed, monomials of edges of
    size >= size survive; zeroing one more keeps only sizes >= size + 1.
    The difference is exactly the size-``size`` family.  The top size needs
    no subtraction: zeroing all padding variables isolates it.
    """
    k = t.order
    if not 1 <= size <= k:
        raise ValueError(f"size {size} out of range [1, {k}]")
    booleanized = _boolean_monomials(t, n)
    kept = _partial_padding_evaluation(booleanized, n, size - 1)
    if size < k:
        dropped = _partial_padding_evaluation(booleanized, n, size)
        for key, coefficient in dropped.items():
            kept[key] = kept.get(key, 0) - coefficient
    return {frozenset(key) for key, coefficient in kept.items() if coefficient != 0}


def dnf_extract_structural(t: SymTensor, n: int, size: int) -> set[frozenset[int]]:
    """Edges of the given size, read straight off the keys' padding suffixes."""
    k = t.order
    if t.dim != n + k - 1:
        raise ValueError(f"tensor dim {t.dim} does not match n={n}, order {k}")
    if not 1 <= size <= k:
        raise ValueError(f"size {size} out of range [1, {k}]")
    expected = tuple(range(n + size, n + k))
    out = set()
    for key in t.entries:
        padding = tuple(i for i in key if i > n)
        if padding == expected and len(key) - len(padding) == size:
            out.add(frozenset(i for i in key if i <= n))
    return out
