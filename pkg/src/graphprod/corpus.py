"""Named small complexes used for cross-checks, and seeded random complexes."""

from __future__ import annotations

import random
from itertools import combinations

from .complexes import SimplicialComplex, cycle, discrete, from_facets, path, simplex

CORPUS = {
    "two_points": discrete(2),
    "three_points": discrete(3),
    "path3": path(3),
    "square": cycle(4),
    "simplex3": simplex(3),
}


def random_complex(m: int, rng: random.Random, density: float = 0.5) -> SimplicialComplex:
    """Random complex on m vertices: each subset of size >= 2 is offered as a
    facet with probability ``density / size``."""
    facets = []
    for k in range(2, m + 1):
        for S in combinations(range(1, m + 1), k):
            if rng.random() < density / k:
                facets.append(S)
    return from_facets(m, facets)


def random_complexes(count: int, m: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    return [random_complex(m, rng) for _ in range(count)]
