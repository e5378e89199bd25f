from itertools import combinations

import pytest

from graphprod.complexes import cycle, discrete, from_facets, path, simplex, simplex_boundary
from graphprod.corpus import CORPUS


@pytest.fixture
def square():
    return cycle(4)


@pytest.fixture
def corpus():
    return dict(CORPUS)


SMALL_COMPLEXES = {
    **CORPUS,
    "edge": simplex(2),
    "point": discrete(1),
    "four_points": discrete(4),
    "boundary_triangle": simplex_boundary(3),
    "path4": path(4),
    "pentagon": cycle(5),
    "triangle_with_tail": from_facets(4, [(1, 2, 3), (3, 4)]),
    "hollow_square_with_diagonal": from_facets(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]),
}


def tits_matrix(K, word):
    """Geometric (Tits) representation of the right-angled Coxeter group of K.

    a_i acts by x -> x - 2 B(e_i, x) e_i with B(e_i, e_i) = 1, B(e_i, e_j) = 0
    on edges and -1 otherwise.  It is faithful, so it decides equality of
    words independently of any normal form.
    """
    m = K.m

    def B(i, j):
        if i == j:
            return 1
        return 0 if (min(i, j), max(i, j)) in K.faces else -1

    mat = [[int(r == c) for c in range(m)] for r in range(m)]
    for v, e in word:
        if e % 2 == 0:
            continue
        # left-multiply the column vectors by the reflection matrix of v
        refl = [[int(r == c) - (2 * B(v, c + 1) if r == v - 1 else 0) for c in range(m)] for r in range(m)]
        mat = [[sum(refl[r][k] * mat[k][c] for k in range(m)) for c in range(m)] for r in range(m)]
    return tuple(map(tuple, mat))


def subsets(m):
    for r in range(m + 1):
        yield from combinations(range(1, m + 1), r)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
