from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import SMALL_COMPLEXES
from graphprod.complexes import discrete, disjoint_union, join, missing_faces, path, simplex
from graphprod.corpus import CORPUS
from graphprod.errors import ExtractionError
from graphprod.lie import (
    free_restricted_dim,
    graph_lie_dims,
    graph_restricted_lie_dims,
    is_lyndon,
    jacobson_terms,
    lyndon_words,
    p_power_axiom_check,
    pbw_extract,
    pbw_product,
    restricted_pbw_extract,
    restricted_pbw_product,
    standard_bracketing,
    witt_dimension,
)
from graphprod.ncalg import NCPolynomial, bracket, hilbert_series_formula, presentation_from_complex
from graphprod.series import IntegerPowerSeries, geometric


def rotation_lyndon(m, n):
    """Words strictly smaller than all their proper rotations, by direct scan."""
    out = []
    for w in product(range(1, m + 1), repeat=n):
        if all(w < w[k:] + w[:k] for k in range(1, n)):
            out.append(w)
    return out


class TestLyndon:
    def test_examples(self):
        assert lyndon_words(2, 1) == [(1,), (2,)]
        assert lyndon_words(2, 2) == [(1, 2)]
        assert lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_against_rotation_scan(self, m):
        for n in range(1, 8 if m <= 3 else 6):
            assert lyndon_words(m, n) == rotation_lyndon(m, n)

    def test_is_lyndon(self):
        assert is_lyndon((1, 1, 2)) and not is_lyndon((1, 2, 1)) and not is_lyndon((1, 1))

    def test_standard_bracketing(self):
        assert standard_bracketing((1,)) == "1"
        assert standard_bracketing((1, 2)) == "[1,2]"
        assert standard_bracketing((1, 1, 2)) == "[1,[1,2]]"
        assert standard_bracketing((1, 2, 2)) == "[[1,2],2]"
        with pytest.raises(ValueError):
            standard_bracketing((2, 1))


class TestCounts:
    def test_witt_examples(self):
        assert [witt_dimension(2, n) for n in range(1, 6)] == [2, 1, 2, 3, 6]
        assert [witt_dimension(1, n) for n in range(2, 8)] == [0] * 6
        assert witt_dimension(3, 2) == 3

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_witt_counts_lyndon_words(self, m):
        for n in range(1, 8 if m <= 3 else 6):
            assert witt_dimension(m, n) == len(rotation_lyndon(m, n))

    def test_free_restricted_examples(self):
        assert [free_restricted_dim(2, n, 2) for n in range(1, 5)] == [2, 3, 2, 6]
        assert [free_restricted_dim(1, n, 2) for n in range(1, 17)] == [
            1 if n & (n - 1) == 0 else 0 for n in range(1, 17)]
        assert free_restricted_dim(2, 3, 3) == 4

    @pytest.mark.parametrize("m,p", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 5)])
    def test_free_restricted_is_sum_over_p_powers(self, m, p):
        for n in range(1, 20):
            expected = sum(witt_dimension(m, n // p ** i) for i in range(6) if n % p ** i == 0)
            assert free_restricted_dim(m, n, p) == expected

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            witt_dimension(0, 3)
        with pytest.raises(ValueError):
            free_restricted_dim(2, 3, 4)


class TestPBW:
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_witt_identity(self, m):
        dims = [witt_dimension(m, n) for n in range(1, 11)]
        assert pbw_product(dims, 10) == geometric(m, 10)

    @pytest.mark.parametrize("m,p", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_restricted_identity(self, m, p):
        dims = [free_restricted_dim(m, n, p) for n in range(1, 9)]
        assert restricted_pbw_product(dims, 8, p) == geometric(m, 8)

    def test_extract_free(self):
        assert pbw_extract(geometric(2, 5), 5) == (2, 1, 2, 3, 6)

    def test_extract_polynomial(self):
        H = IntegerPowerSeries.one(6) / IntegerPowerSeries.from_polynomial([1, -1], 6) ** 2
        assert pbw_extract(H, 6) == (2, 0, 0, 0, 0, 0)

    def test_extract_square_poly(self):
        H = hilbert_series_formula(presentation_from_complex(CORPUS["square"], "poly"), 6)
        dims = pbw_extract(H, 6)
        assert dims[:2] == (4, 2) and all(d >= 0 for d in dims)
        assert pbw_product(dims, 6) == H

    def test_restricted_extract_dihedral(self):
        H = IntegerPowerSeries.from_polynomial([1, 1], 8) / IntegerPowerSeries.from_polynomial([1, -1], 8)
        # binary expansion: (1+t)/(1-t) = (1+t)^2 * prod_k (1 + t^(2^k))
        direct = IntegerPowerSeries.from_polynomial([1, 1], 8) ** 2
        for k in (1, 2, 3):
            direct = direct * IntegerPowerSeries.from_polynomial([1] + [0] * (2 ** k - 1) + [1], 8)
        assert direct == H
        assert restricted_pbw_extract(H, 8, 2) == (2, 1, 0, 1, 0, 0, 0, 1)

    def test_restricted_extract_free(self):
        assert restricted_pbw_extract(geometric(2, 8), 8, 2) == tuple(
            free_restricted_dim(2, n, 2) for n in range(1, 9))

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_restricted_extract_elementary_abelian(self, m):
        H = IntegerPowerSeries.from_polynomial([1, 1], 8) ** m
        assert restricted_pbw_extract(H, 8, 2) == (m,) + (0,) * 7

    def test_extraction_errors(self):
        with pytest.raises(ExtractionError):
            pbw_extract(IntegerPowerSeries.from_polynomial([1, 2, 0, 0], 3), 3)
        with pytest.raises(ExtractionError):
            pbw_extract(IntegerPowerSeries.from_polynomial([2, 1], 3), 3)
        with pytest.raises(ExtractionError):
            restricted_pbw_extract(IntegerPowerSeries.from_polynomial([1, 1, 2], 4), 4, 2)

    @given(st.lists(st.integers(0, 3), min_size=6, max_size=6),
           st.lists(st.integers(0, 3), min_size=6, max_size=6))
    def test_extraction_is_additive(self, a, b):
        assert pbw_extract(pbw_product(a, 6) * pbw_product(b, 6), 6) == tuple(x + y for x, y in zip(a, b))
        H = restricted_pbw_product(a, 6, 3) * restricted_pbw_product(b, 6, 3)
        assert restricted_pbw_extract(H, 6, 3) == tuple(x + y for x, y in zip(a, b))

    @given(st.lists(st.integers(0, 4), min_size=8, max_size=8), st.sampled_from([2, 3, 5]))
    def test_round_trip(self, dims, p):
        assert pbw_extract(pbw_product(dims, 8), 8) == tuple(dims)
        assert restricted_pbw_extract(restricted_pbw_product(dims, 8, p), 8, p) == tuple(dims)


class TestGraphDims:
    def test_points_are_free(self):
        assert graph_lie_dims(discrete(2), 7) == tuple(witt_dimension(2, n) for n in range(1, 8))
        assert graph_lie_dims(discrete(3), 6) == tuple(witt_dimension(3, n) for n in range(1, 7))

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_complete_is_abelian(self, m):
        assert graph_lie_dims(simplex(m), 6) == (m,) + (0,) * 5
        assert graph_restricted_lie_dims(simplex(m), 2, 6) == (m,) + (0,) * 5
        assert graph_restricted_lie_dims(simplex(m), 3, 6) == (m,) + (0,) * 5

    def test_path(self):
        dims = graph_lie_dims(path(3), 6)
        assert dims[:2] == (3, 1) and all(d >= 0 for d in dims)

    def test_infinite_dihedral(self):
        assert graph_restricted_lie_dims(discrete(2), 2, 8) == (2, 1, 0, 1, 0, 0, 0, 1)

    @pytest.mark.parametrize("name", sorted(SMALL_COMPLEXES))
    @pytest.mark.parametrize("p", [2, 3])
    def test_degree_two_counts_missing_edges(self, name, p):
        K = SMALL_COMPLEXES[name]
        missing = sum(1 for f in missing_faces(K) if len(f) == 2)
        dims = graph_restricted_lie_dims(K, p, 4)
        assert dims[0] == K.m and dims[1] == missing
        assert graph_lie_dims(K, 4)[:2] == (K.m, missing)

    def test_join_adds_dims(self):
        # the join is the tensor product of enveloping algebras, so Hilbert
        # series multiply and extracted dimensions add
        for a, b in [("path3", "two_points"), ("square", "three_points")]:
            A, B = CORPUS[a], CORPUS[b]
            HA = hilbert_series_formula(presentation_from_complex(A, "poly"), 6)
            HB = hilbert_series_formula(presentation_from_complex(B, "poly"), 6)
            expected = tuple(x + y for x, y in zip(pbw_extract(HA, 6), pbw_extract(HB, 6)))
            assert pbw_extract(HA * HB, 6) == expected
            assert graph_lie_dims(join(A, B), 6) == expected

    def test_disjoint_edges(self):
        assert graph_lie_dims(disjoint_union(simplex(2), simplex(2)), 3)[:2] == (4, 4)


class TestPPower:
    def test_p2_generators(self):
        u1, u2 = NCPolynomial.generator(2, 2, 1), NCPolynomial.generator(2, 2, 2)
        assert (u1 + u2) ** 2 == u1 ** 2 + u2 ** 2 + bracket(u1, u2)

    def test_p3_generators(self):
        u1, u2 = NCPolynomial.generator(2, 3, 1), NCPolynomial.generator(2, 3, 2)
        xy = bracket(u1, u2)
        assert (u1 + u2) ** 3 == u1 ** 3 + u2 ** 3 + bracket(xy, u2) - bracket(xy, u1)
        assert jacobson_terms(u1, u2, 3) == bracket(xy, u2) - bracket(xy, u1)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_doubling(self, p):
        x = NCPolynomial(2, p, {(1, 2): 1, (2,): 1})
        assert (x + x) ** p == (x ** p) * pow(2, p, p)

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_random_trials(self, p):
        assert p_power_axiom_check(p, 100 if p <= 3 else 20, seed=11)

    def test_detects_wrong_operation(self, monkeypatch):
        import graphprod.lie as lie

        monkeypatch.setattr(lie, "jacobson_terms", lambda x, y, p: NCPolynomial.zero(x.m, x.p))
        assert not lie.p_power_axiom_check(3, 20, seed=1)
