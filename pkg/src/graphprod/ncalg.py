"""Graded quotients of free associative algebras over GF(p).

The algebras handled here are graph products of one-generator algebras: each
generator may satisfy a power relation ``u_i^e = 0``, and generators joined
by an edge either commute or anticommute.  Every generator has degree 1.

Two independent routes to the graded dimensions are provided.  The brute
force route computes the rank of the degree-n part of the two-sided ideal
directly.  The formula route uses the clique expansion
``1/H = sum over cliques I of prod_{i in I} (1/H_i - 1)``, where ``H_i`` is
the Hilbert series of the i-th one-generator factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .complexes import Graph, SimplicialComplex, cliques, one_skeleton
from .errors import BudgetExceededError, SeriesFormulaError
from .gfp import SparseEchelon, check_prime
from .series import IntegerPowerSeries

DEFAULT_WORD_BUDGET = 300_000

KINDS = ("poly", "ext", "trunc")


class NCPolynomial:
    """A finite GF(p)-linear combination of words in ``u_1 .. u_m``.

    Words are tuples of generator indices; the empty tuple is the unit.
    """

    __slots__ = ("m", "p", "terms")

    def __init__(self, m: int, p: int, terms: Optional[Mapping] = None):
        self.m = m
        self.p = p
        clean = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for a in w:
                if not 1 <= a <= m:
                    raise ValueError(f"letter {a} out of range 1..{m}")
            c = (clean.get(w, 0) + c) % p
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def generator(cls, m: int, p: int, i: int) -> "NCPolynomial":
        return cls(m, p, {(i,): 1})

    @classmethod
    def one(cls, m: int, p: int) -> "NCPolynomial":
        return cls(m, p, {(): 1})

    @classmethod
    def zero(cls, m: int, p: int) -> "NCPolynomial":
        return cls(m, p)

    def _check(self, other: "NCPolynomial") -> None:
        if self.m != other.m or self.p != other.p:
            raise ValueError("polynomials over different alphabets or fields")

    def __add__(self, other):
        return nc_add(self, other)

    def __sub__(self, other):
        return nc_add(self, nc_scale(other, -1))

    def __neg__(self):
        return nc_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return nc_scale(self, other)
        return nc_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return nc_scale(self, other)
        return NotImplemented

    def __pow__(self, k: int) -> "NCPolynomial":
        out = NCPolynomial.one(self.m, self.p)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return (self.m, self.p, self.terms) == (other.m, other.p, other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "".join(f"u{a}" for a in w) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def degrees(self) -> set:
        return {len(w) for w in self.terms}


def nc_add(f: NCPolynomial, g: NCPolynomial) -> NCPolynomial:
    f._check(g)
    terms = dict(f.terms)
    for w, c in g.terms.items():
        terms[w] = terms.get(w, 0) + c
    return NCPolynomial(f.m, f.p, terms)


def nc_scale(f: NCPolynomial, k: int) -> NCPolynomial:
    return NCPolynomial(f.m, f.p, {w: k * c for w, c in f.terms.items()})


def nc_multiply(f: NCPolynomial, g: NCPolynomial) -> NCPolynomial:
    f._check(g)
    terms = {}
    for w1, c1 in f.terms.items():
        for w2, c2 in g.terms.items():
            w = w1 + w2
            terms[w] = terms.get(w, 0) + c1 * c2
    return NCPolynomial(f.m, f.p, terms)


def bracket(x: NCPolynomial, y: NCPolynomial) -> NCPolynomial:
    """The commutator xy - yx."""
    return x * y - y * x


@dataclass(frozen=True)
class AlgebraPresentation:
    """Generators ``u_1..u_m`` over GF(p) with relations ``u_i^e_i = 0`` and
    ``u_i u_j - s u_j u_i = 0`` for every edge, where ``s`` is ``edge_sign``
    (+1 commutes, -1 anticommutes).

    ``kind`` records which graph product a complex produced (``poly``,
    ``ext`` or ``trunc``); hand-built presentations leave it ``None``.
    """

    generator_count: int
    field_char: int
    power_exponents: tuple
    edge_set: frozenset
    edge_sign: int = 1
    kind: Optional[str] = field(default=None, compare=True)

    def __post_init__(self):
        check_prime(self.field_char)
        exps = tuple(self.power_exponents)
        if len(exps) != self.generator_count:
            raise ValueError("one power exponent (or None) per generator is required")
        for e in exps:
            if e is not None and e < 2:
                raise ValueError(f"power exponent {e} must be at least 2")
        object.__setattr__(self, "power_exponents", exps)
        edges = set()
        for e in self.edge_set:
            i, j = e
            if i == j or not (1 <= i <= self.generator_count and 1 <= j <= self.generator_count):
                raise ValueError(f"invalid edge {e!r}")
            edges.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edge_set", frozenset(edges))
        if self.edge_sign not in (1, -1):
            raise ValueError("edge_sign must be +1 or -1")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def m(self) -> int:
        return self.generator_count

    @property
    def p(self) -> int:
        return self.field_char

    def relations(self) -> list:
        """Defining relations as NCPolynomials."""
        m, p = self.m, self.p
        rels = []
        for i, e in enumerate(self.power_exponents, start=1):
            if e is not None:
                rels.append(NCPolynomial(m, p, {(i,) * e: 1}))
        for i, j in sorted(self.edge_set):
            rels.append(NCPolynomial(m, p, {(i, j): 1, (j, i): -self.edge_sign}))
        return rels

    def graph(self) -> Graph:
        return Graph(self.m, self.edge_set)


def presentation_from_complex(
    K: SimplicialComplex, kind: str, p: Optional[int] = None
) -> AlgebraPresentation:
    """The graph-product algebra of ``K`` of the given kind.

    ``poly``: commuting generators, no power relations.  ``ext``: ``u_i^2 = 0``
    and anticommuting edges.  ``trunc``: ``u_i^p = 0`` and commuting edges.
    Dimensions of ``poly`` do not depend on the field; it defaults to GF(2).
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if p is None:
        if kind != "poly":
            raise ValueError(f"kind {kind!r} needs a prime p")
        p = 2
    check_prime(p)
    edges = one_skeleton(K).edges
    if kind == "poly":
        exps, sign = (None,) * K.m, 1
    elif kind == "ext":
        exps, sign = (2,) * K.m, -1
    else:
        exps, sign = (p,) * K.m, 1
    return AlgebraPresentation(K.m, p, exps, edges, sign, kind)


def _word_code(word, m: int) -> int:
    code = 0
    for a in word:
        code = code * m + (a - 1)
    return code


def graded_dim_bruteforce(
    P: AlgebraPresentation, n: int, budget: int = DEFAULT_WORD_BUDGET
) -> int:
    """Dimension of the degree-n component, as m^n minus the rank of all
    products ``w1 * r * w2`` of total degree n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    m = P.m
    if m == 0:
        return 1 if n == 0 else 0
    size = m ** n
    if size > budget:
        raise BudgetExceededError(f"degree {n} has {size} words, budget {budget}", degree=n)
    ech = SparseEchelon(P.p)
    for rel in P.relations():
        (d,) = rel.degrees()
        if d > n:
            continue
        coded = [(_word_code(w, m), c) for w, c in rel.terms.items()]
        for left_len in range(n - d + 1):
            right_len = n - d - left_len
            shift = m ** right_len
            block = m ** d
            for left in range(m ** left_len):
                base = left * block
                for right in range(shift):
                    ech.add({(base + c) * shift + right: v for c, v in coded})
    return size - ech.rank


def bruteforce_series(P: AlgebraPresentation, N: int, budget: int = DEFAULT_WORD_BUDGET) -> IntegerPowerSeries:
    return IntegerPowerSeries(tuple(graded_dim_bruteforce(P, n, budget) for n in range(N + 1)))


def factor_series(e: Optional[int], N: int) -> IntegerPowerSeries:
    """Hilbert series of one generator with ``u^e = 0`` (``None``: no relation)."""
    if e is None:
        return IntegerPowerSeries((1,) * (N + 1))
    return IntegerPowerSeries.from_polynomial([1] * e, N)


def hilbert_series_formula(P: AlgebraPresentation, N: int) -> IntegerPowerSeries:
    """Hilbert series of a complex-built presentation via the clique expansion."""
    if P.kind is None:
        raise ValueError("the clique formula only applies to presentations built from a complex")
    one = IntegerPowerSeries.one(N)
    local = [factor_series(e, N).inverse() - one for e in P.power_exponents]
    recip = IntegerPowerSeries((0,) * (N + 1))
    for clique in cliques(P.graph()):
        term = one
        for i in clique:
            term = term * local[i - 1]
        recip = recip + term
    H = recip.inverse()
    for n, c in enumerate(H):
        if c < 0:
            raise SeriesFormulaError(f"negative coefficient {c} at degree {n}")
    return H


def free_product_series(parts: Iterable[IntegerPowerSeries]) -> IntegerPowerSeries:
    """Hilbert series of a free product: 1/H = sum(1/H_j) - (k - 1)."""
    parts = list(parts)
    N = min(s.N for s in parts)
    one = IntegerPowerSeries.one(N)
    recip = one
    for s in parts:
        recip = recip + (s.truncate(N).inverse() - one)
    return recip.inverse()
