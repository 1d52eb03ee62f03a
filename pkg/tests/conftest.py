"""Shared helpers for the test suite."""

import random

import pytest

from qgc.graphs import Graph
from qgc.zmod import ModTuple


def mt(dim: int, digits: str) -> ModTuple:
    """Shorthand: mt(3, '012') -> ModTuple(3, (0, 1, 2))."""
    return ModTuple(dim, tuple(int(ch) for ch in digits))


def random_graph(rng: random.Random, max_n: int = 4, dims=(2, 3, 4)) -> Graph:
    """Uniform random weighted graph, edgeless cases included."""
    dim = rng.choice(list(dims))
    n = rng.randint(2, max_n)
    gamma = [[0] * n for _ in range(n)]
    for l in range(n):
        for m in range(l + 1, n):
            w = rng.randrange(dim)
            gamma[l][m] = gamma[m][l] = w
    return Graph(dim, tuple(tuple(row) for row in gamma))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0DE)
