from __future__ import annotations

import random
from pathlib import Path

import pytest

from hgtensor import Hypergraph, parse_hypergraph

DATA = Path(__file__).parent / "data"

SAMPLE_TEXT = "7\n1 2 3\n1 2 7\n6 7\n5\n4\n3 4\n4 7\n"


@pytest.fixture
def sample() -> Hypergraph:
    return parse_hypergraph(SAMPLE_TEXT)


def random_hypergraph(
    rng: random.Random, max_n: int = 12, max_k: int = 5, max_edges: int = 10
) -> Hypergraph:
    """A nonempty hypergraph with mixed cardinalities, deterministic per seed."""
    n = rng.randint(1, max_n)
    cap = min(n, max_k)
    target = rng.randint(1, max_edges)
    edges: set[frozenset[int]] = set()
    for _ in range(20 * target):
        if len(edges) == target:
            break
        size = rng.randint(1, cap)
        edges.add(frozenset(rng.sample(range(1, n + 1), size)))
    return Hypergraph(n, tuple(sorted(edges, key=sorted)))


def random_uniform_hypergraph(
    rng: random.Random, k: int | None = None, max_n: int = 10, max_edges: int = 8
) -> Hypergraph:
    if k is None:
        k = rng.randint(1, 4)
    n = rng.randint(k, max_n)
    target = rng.randint(1, max_edges)
    edges: set[frozenset[int]] = set()
    for _ in range(20 * target):
        if len(edges) == target:
            break
        edges.add(frozenset(rng.sample(range(1, n + 1), k)))
    return Hypergraph(n, tuple(sorted(edges, key=sorted)))
