"""Acceptance gate: ten exact checks, one PASS/FAIL line each.

Run inside the suite with ``pytest tests/test_acceptance.py`` (the lines are
printed in the terminal summary) or standalone with
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time

import pytest

from graphprod.cli import cmd_analyze, elementary_abelian_graph_product
from graphprod.commutators import enumerate_generators, homology_count, realize_generator
from graphprod.complexes import (
    clique_complex,
    discrete,
    one_skeleton,
    reduced_h0_rank,
    simplex,
    substitution_complex,
)
from graphprod.corpus import CORPUS, random_complexes
from graphprod.groupalg import quillen_check
from graphprod.lie import (
    free_restricted_dim,
    graph_restricted_lie_dims,
    p_power_axiom_check,
    pbw_product,
    restricted_pbw_product,
    witt_dimension,
)
from graphprod.ncalg import (
    KINDS,
    AlgebraPresentation,
    bruteforce_series,
    graded_dim_bruteforce,
    hilbert_series_formula,
    presentation_from_complex,
)
from graphprod.series import geometric
from graphprod.words import GroupSpec, abelianization, generator, normal_form, power
from test_words import random_move, random_raw, specs_for

CRITERIA = {}
RESULTS = []


def criterion(number, title):
    def register(fn):
        CRITERIA[number] = (title, fn)
        return fn
    return register


@criterion(1, "group-algebra oracle = brute force = clique formula for trunc(p)")
def three_way_agreement():
    rows = 0
    for name, K in sorted(CORPUS.items()):
        for p in (2, 3):
            N = 7 if p == 2 and K.m <= 3 else 5
            report = quillen_check(K, p, N)
            for r in report.rows:
                assert r.stabilized, f"{name} p={p} degree {r.degree} not stabilized"
                assert r.oracle == r.bruteforce == r.formula, (
                    f"{name} p={p} degree {r.degree}: oracle {r.oracle}, "
                    f"bruteforce {r.bruteforce}, formula {r.formula}")
            rows += len(report.rows)
    return f"{rows} (complex, p, degree) rows agree, all stabilized"


@criterion(2, "infinite dihedral closed forms")
def infinite_dihedral():
    P = presentation_from_complex(discrete(2), "trunc", 2)
    expected = [1] + [2] * 8
    assert list(hilbert_series_formula(P, 8)) == expected
    assert list(bruteforce_series(P, 8)) == expected
    dims = graph_restricted_lie_dims(discrete(2), 2, 8)
    assert dims == tuple(2 if n == 1 else int(n in (2, 4, 8)) for n in range(1, 9))
    return f"trunc(2) dims {expected}, restricted Lie dims {list(dims)}"


@criterion(3, "PBW and restricted PBW identities")
def pbw_identities():
    for m in (1, 2, 3):
        assert pbw_product([witt_dimension(m, n) for n in range(1, 11)], 10) == geometric(m, 10), m
    for m, p in ((1, 2), (2, 2), (3, 2), (2, 3)):
        dims = [free_restricted_dim(m, n, p) for n in range(1, 9)]
        assert restricted_pbw_product(dims, 8, p) == geometric(m, 8), (m, p)
    return "ordinary for m=1..3 to t^10, restricted for 4 (m,p) pairs to t^8"


@criterion(4, "generator count equals homology sum")
def count_identity():
    complexes = list(CORPUS.values()) + random_complexes(50, 5, seed=0)
    for K in complexes:
        assert len(enumerate_generators(K)) == homology_count(K), K
    specific = {"square": (CORPUS["square"], 2), "three_points": (CORPUS["three_points"], 5),
                "four_points": (discrete(4), 17), "simplex3": (CORPUS["simplex3"], 0)}
    for name, (K, value) in specific.items():
        assert len(enumerate_generators(K)) == homology_count(K) == value, name
    return f"{len(complexes)} complexes; 4-cycle 2, 3 points 5, 4 points 17, simplex 0"


@criterion(5, "realized generators lie in the commutator subgroup and are nontrivial")
def generator_membership():
    checked = 0
    for name, K in sorted(CORPUS.items()):
        spec = GroupSpec.racg(K)
        for d in enumerate_generators(K):
            g = realize_generator(spec, d, K)
            assert not any(abelianization(g)), (name, str(d))
            if reduced_h0_rank(K, d.support) > 0:
                assert not g.is_identity, (name, str(d))
            checked += 1
    return f"{checked} corpus descriptors"


@criterion(6, "Hilbert formula agrees with brute force")
def hilbert_vs_bruteforce():
    P = presentation_from_complex(CORPUS["path3"], "ext", 2)
    assert list(hilbert_series_formula(P, 4)) == list(bruteforce_series(P, 4)) == [1, 3, 4, 4, 4]
    Q = presentation_from_complex(CORPUS["square"], "poly")
    H, B = hilbert_series_formula(Q, 6), bruteforce_series(Q, 6)
    assert H == B, (list(H), list(B))
    return f"ext on path3 (1,3,4,4,4); poly on 4-cycle {list(H)}"


@criterion(7, "word problem: commuting squares, move invariance, idempotence")
def word_problem():
    specs = 0
    for name, K in sorted(CORPUS.items()):
        racg = GroupSpec.racg(K)
        for i in range(1, K.m + 1):
            for j in range(i + 1, K.m + 1):
                x = power(generator(racg, i) * generator(racg, j), 2)
                assert x.is_identity == ((i, j) in K.faces), (name, i, j)
        for spec in specs_for(K):
            rng = random.Random(f"acceptance-{name}-{spec.orders}")
            for _ in range(1000):
                raw = random_raw(rng, spec, rng.randint(0, 8))
                target = normal_form(spec, raw)
                w = raw
                for _ in range(rng.randint(1, 20)):
                    w = random_move(rng, spec, w)
                assert normal_form(spec, w) == target, (name, raw, w)
            for _ in range(1000):
                g = normal_form(spec, random_raw(rng, spec, rng.randint(0, 12)))
                assert normal_form(spec, g.syllables) == g
            specs += 1
    return f"{specs} specs x 1000 move trials and 1000 idempotence trials"


@criterion(8, "restricted p-power axiom in free algebras")
def p_power():
    assert p_power_axiom_check(2, 200, seed=0)
    assert p_power_axiom_check(3, 200, seed=0)
    return "200 trials each for p=2 and p=3"


@criterion(9, "substitution complex vs elementary abelian graph product")
def substitution_coherence():
    K = discrete(2)
    S = substitution_complex(K, [simplex(2), simplex(2)])
    from_subst = list(hilbert_series_formula(presentation_from_complex(S, "trunc", 2), 5))
    direct = AlgebraPresentation(4, 2, (2, 2, 2, 2), frozenset({(1, 2), (3, 4)}))
    assert direct == elementary_abelian_graph_product(K, [2, 2], 2)
    brute = [graded_dim_bruteforce(direct, n) for n in range(6)]
    assert from_subst == brute, (from_subst, brute)
    return f"Hilbert coefficients {from_subst}"


@criterion(10, "presentations depend only on the one-skeleton")
def one_skeleton_presentations():
    for name, K in sorted(CORPUS.items()):
        L = clique_complex(one_skeleton(K))
        for kind in KINDS:
            assert presentation_from_complex(K, kind, 2) == presentation_from_complex(L, kind, 2), (name, kind)
        report = cmd_analyze(K, name)
        assert report["pass"] and all(report["result"]["presentation_equals_clique_complex"].values())
    return f"{len(CORPUS)} corpus complexes x {len(KINDS)} kinds, analyze agrees"


def run_criterion(number):
    title, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail = f"assertion failed: {exc}"
        ok = False
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({detail}; {time.perf_counter() - start:.1f}s)"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = run_criterion(number)
    assert ok, line


if __name__ == "__main__":
    outcomes = [run_criterion(n)[0] for n in sorted(CRITERIA)]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria passed")
    sys.exit(0 if all(outcomes) else 1)
