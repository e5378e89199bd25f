"""Dimension bookkeeping for free, restricted and graph Lie algebras.

Lie algebras never appear here as bracket trees.  Their graded dimensions are
read off from Hilbert series of enveloping algebras by inverting the
factorizations

    H = prod_n (1 - t^n)^(-d_n)                      (ordinary)
    H = prod_n ((1 - t^(p n)) / (1 - t^n))^(d_n)     (restricted)

one degree at a time in exact integer arithmetic.
"""

from __future__ import annotations

import random
from typing import Optional

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from .complexes import SimplicialComplex
from .errors import ExtractionError
from .gfp import check_prime
from .ncalg import NCPolynomial, bracket, hilbert_series_formula, presentation_from_complex
from .series import IntegerPowerSeries

GradedDims = tuple


def is_lyndon(word) -> bool:
    """Strictly smaller than every proper rotation."""
    w = tuple(word)
    return bool(w) and all(w < w[k:] + w[:k] for k in range(1, len(w)))


def lyndon_words(m: int, n: int) -> list:
    """Lyndon words of length ``n`` over ``{1..m}``, in lexicographic order
    (Duval's generation algorithm)."""
    if m < 1 or n < 1:
        raise ValueError("alphabet size and length must be positive")
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append(tuple(a + 1 for a in w))
        # extend periodically to length n, then increment the last letter < m
        k = len(w)
        while len(w) < n:
            w.append(w[len(w) - k])
        while w and w[-1] == m - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def standard_bracketing(word) -> str:
    """Display form of the Lie monomial of a Lyndon word, e.g. ``[1,[1,2]]``."""
    w = tuple(word)
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if len(w) == 1:
        return str(w[0])
    # right factor: longest proper Lyndon suffix
    for k in range(1, len(w)):
        if is_lyndon(w[k:]):
            return f"[{standard_bracketing(w[:k])},{standard_bracketing(w[k:])}]"
    raise AssertionError("unreachable: every Lyndon word of length > 1 has a Lyndon suffix")


def witt_dimension(m: int, n: int) -> int:
    """Number of Lyndon words of length n on m letters: (1/n) sum_{d|n} mu(d) m^(n/d)."""
    if m < 1 or n < 1:
        raise ValueError("alphabet size and degree must be positive")
    total = sum(int(mobius(d)) * m ** (n // d) for d in divisors(n))
    return total // n


def free_restricted_dim(m: int, n: int, p: int) -> int:
    """Dimension in degree n of the free restricted Lie algebra on m generators:
    one basis element w^(p^i) for every Lyndon word w of length n / p^i."""
    check_prime(p)
    if m < 1 or n < 1:
        raise ValueError("alphabet size and degree must be positive")
    total, d = 0, n
    while True:
        total += witt_dimension(m, d)
        if d % p:
            return total
        d //= p


def _binomial_series(d: int, step: int, span: int, N: int) -> IntegerPowerSeries:
    """(1 + t^step + ... + t^((span-1) step))^d, or (1 - t^step)^(-d) when span is None."""
    if span is None:
        base = [0] * (N + 1)
        for k in range(0, N + 1, step):
            base[k] = 1
    else:
        base = [0] * (N + 1)
        for k in range(span):
            if k * step <= N:
                base[k * step] = 1
    return IntegerPowerSeries(tuple(base)) ** d


def _extract(H: IntegerPowerSeries, N: int, span: Optional[int]) -> GradedDims:
    if H[0] != 1:
        raise ExtractionError("series must have constant term 1", degree=0)
    if H.N < N:
        raise ValueError(f"series known only up to degree {H.N}")
    rest = H.truncate(N)
    dims = []
    for n in range(1, N + 1):
        d = rest[n]
        if d < 0:
            raise ExtractionError(f"negative dimension {d} in degree {n}", degree=n)
        dims.append(d)
        if d:
            rest = rest / _binomial_series(d, n, span, N)
    return tuple(dims)


def pbw_extract(H: IntegerPowerSeries, N: int) -> GradedDims:
    """The unique d_1..d_N with prod (1 - t^n)^(-d_n) = H mod t^(N+1)."""
    return _extract(H, N, None)


def restricted_pbw_extract(H: IntegerPowerSeries, N: int, p: int) -> GradedDims:
    """The unique d_1..d_N with prod ((1 - t^(pn)) / (1 - t^n))^(d_n) = H mod t^(N+1)."""
    check_prime(p)
    return _extract(H, N, p)


def pbw_product(dims, N: int) -> IntegerPowerSeries:
    """prod_n (1 - t^n)^(-d_n), truncated at N."""
    out = IntegerPowerSeries.one(N)
    for n, d in enumerate(dims, start=1):
        if n <= N and d:
            out = out * _binomial_series(d, n, None, N)
    return out


def restricted_pbw_product(dims, N: int, p: int) -> IntegerPowerSeries:
    out = IntegerPowerSeries.one(N)
    for n, d in enumerate(dims, start=1):
        if n <= N and d:
            out = out * _binomial_series(d, n, p, N)
    return out


def graph_lie_dims(K: SimplicialComplex, N: int) -> GradedDims:
    """Graded dimensions of the partially commutative Lie algebra of ``K``
    (the Lie algebra of the lower central series of the right-angled Artin group)."""
    return pbw_extract(hilbert_series_formula(presentation_from_complex(K, "poly"), N), N)


def graph_restricted_lie_dims(K: SimplicialComplex, p: int, N: int) -> GradedDims:
    """Graded dimensions of the graph product of trivial one-generator
    restricted Lie algebras over GF(p)."""
    H = hilbert_series_formula(presentation_from_complex(K, "trunc", p), N)
    return restricted_pbw_extract(H, N, p)


def jacobson_terms(x: NCPolynomial, y: NCPolynomial, p: int) -> NCPolynomial:
    """sum_i s_i(x, y), where i * s_i is the coefficient of lambda^(i-1) in
    ad(lambda x + y)^(p-1) applied to x (brackets nested to the left)."""
    # coeffs[k] is the coefficient of lambda^k
    coeffs = [x]
    for _ in range(p - 1):
        nxt = [NCPolynomial.zero(x.m, x.p) for _ in range(len(coeffs) + 1)]
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + bracket(c, x)
            nxt[k] = nxt[k] + bracket(c, y)
        coeffs = nxt
    total = NCPolynomial.zero(x.m, x.p)
    for i in range(1, p):
        total = total + coeffs[i - 1] * pow(i, -1, p)
    return total


def random_homogeneous(rng: random.Random, m: int, p: int, degree: int, terms: int) -> NCPolynomial:
    poly = {}
    for _ in range(terms):
        w = tuple(rng.randint(1, m) for _ in range(degree))
        poly[w] = poly.get(w, 0) + rng.randint(1, p - 1)
    return NCPolynomial(m, p, poly)


def p_power_axiom_check(p: int, trials: int, seed: int = 0, m: int = 3) -> bool:
    """Check the restricted-Lie additivity axiom in free associative algebras
    over GF(p), with p-th power as the p-operation and xy - yx as bracket.

    For p = 2 and p = 3 the closed forms
    ``(x+y)^2 = x^2 + y^2 + [x,y]`` and
    ``(x+y)^3 = x^3 + y^3 + [[x,y],y] - [[x,y],x]`` are checked as well.
    """
    check_prime(p)
    rng = random.Random(seed)
    for _ in range(trials):
        x = random_homogeneous(rng, m, p, rng.randint(1, 2), rng.randint(1, 3))
        y = random_homogeneous(rng, m, p, rng.randint(1, 2), rng.randint(1, 3))
        lhs = (x + y) ** p
        if lhs != x ** p + y ** p + jacobson_terms(x, y, p):
            return False
        if p == 2 and lhs != x ** 2 + y ** 2 + bracket(x, y):
            return False
        if p == 3:
            xy = bracket(x, y)
            if lhs != x ** 3 + y ** 3 + bracket(xy, y) - bracket(xy, x):
                return False
        a = rng.randint(1, p - 1)
        if (x * a) ** p != (x ** p) * pow(a, p, p):
            return False
    return True
