"""Group algebras of graph products of cyclic p-groups over GF(p), and the
graded algebra of the augmentation-ideal filtration computed from first
principles.

The oracle works only with group elements.  With ``u_i = a_i - 1``, the
subspace ``V_l`` spanned by all products ``u_{i_1} ... u_{i_l}`` is built
level by level as ``V_l = sum_i u_i V_{l-1}``, so the length-l products are
never expanded one by one.  Every such product lives on the ball of radius l
for positive generator steps.  Truncating at length K,

    D_n(K) = dim(V_n + ... + V_K) - dim(V_{n+1} + ... + V_K)

is an upper bound for dim I^n / I^(n+1) that is nonincreasing in K and
eventually exact.  K is raised until three consecutive values agree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complexes import SimplicialComplex
from .errors import BudgetExceededError
from .gfp import BitsetEchelon, SparseEchelon, bits_from_columns, check_prime
from .ncalg import (
    DEFAULT_WORD_BUDGET,
    graded_dim_bruteforce,
    hilbert_series_formula,
    presentation_from_complex,
)
from .words import (
    DEFAULT_BALL_BUDGET,
    GroupElement,
    GroupSpec,
    _canonical,
    generator,
    identity,
    multiply,
)

log = logging.getLogger(__name__)


def uniform_prime_order(spec: GroupSpec) -> int:
    orders = set(spec.orders)
    if len(orders) != 1 or None in orders:
        raise ValueError("all vertex orders must equal the same prime")
    (p,) = orders
    return check_prime(p)


class GroupAlgebraElement:
    """A finite GF(p)-combination of group elements."""

    __slots__ = ("spec", "p", "terms")

    def __init__(self, spec: GroupSpec, p: int, terms=None):
        self.spec = spec
        self.p = p
        clean = {}
        for g, c in (terms or {}).items():
            if g.spec != spec:
                raise ValueError("term from a different group")
            c = (clean.get(g, 0) + c) % p
            if c:
                clean[g] = c
            else:
                clean.pop(g, None)
        self.terms = clean

    @classmethod
    def of(cls, g: GroupElement, p: int) -> "GroupAlgebraElement":
        return cls(g.spec, p, {g: 1})

    def _check(self, other):
        if self.spec != other.spec or self.p != other.p:
            raise ValueError("elements of different group algebras")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return GroupAlgebraElement(self.spec, self.p, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, k: int) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.spec, self.p, {g: k * c for g, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                gh = multiply(g, h)
                terms[gh] = terms.get(gh, 0) + c * d
        return GroupAlgebraElement(self.spec, self.p, terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.spec, self.p, self.terms) == (other.spec, other.p, other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*({g})" for g, c in sorted(self.terms.items(), key=lambda t: t[0]))


def augmentation(x: GroupAlgebraElement) -> int:
    return sum(x.terms.values()) % x.p


def generator_minus_one_product(spec: GroupSpec, indices: Sequence[int]) -> GroupAlgebraElement:
    """Expansion of (a_{i_1} - 1) ... (a_{i_n} - 1) in the group algebra over GF(p)."""
    p = uniform_prime_order(spec)
    one = GroupAlgebraElement.of(identity(spec), p)
    out = one
    for i in indices:
        out = out * (GroupAlgebraElement.of(generator(spec, i), p) - one)
    return out


class AugmentationFiltration:
    """Cached spans of the monomial levels ``V_l`` for one group.

    Columns are ball elements in breadth-first order for positive generator
    steps; the ball grows on demand.
    """

    def __init__(self, spec: GroupSpec, budget: int = DEFAULT_BALL_BUDGET):
        self.spec = spec
        self.p = uniform_prime_order(spec)
        self.budget = budget
        self._ids = {(): 0}
        self._elements = [()]
        self._frontier = [()]
        self._radius = 0
        self._left = {}
        self._levels = [[self._vector({0: 1})]]
        self._ranks = {}

    def _vector(self, coeffs: dict):
        if self.p == 2:
            return frozenset(c for c, v in coeffs.items() if v % 2)
        return {c: v % self.p for c, v in coeffs.items() if v % self.p}

    @property
    def ball_size(self) -> int:
        return len(self._elements)

    def _grow(self, radius: int) -> None:
        spec = self.spec
        while self._radius < radius:
            nxt = []
            for word in self._frontier:
                for i in range(1, spec.m + 1):
                    w = _canonical(spec, word + ((i, 1),))
                    if w not in self._ids:
                        if len(self._elements) >= self.budget:
                            raise BudgetExceededError(
                                f"ball of radius {self._radius + 1} exceeds {self.budget} elements",
                                degree=self._radius + 1)
                        self._ids[w] = len(self._elements)
                        self._elements.append(w)
                        nxt.append(w)
            self._frontier = nxt
            self._radius += 1

    def _times_generator(self, i: int, col: int) -> int:
        key = (i, col)
        hit = self._left.get(key)
        if hit is None:
            w = _canonical(self.spec, ((i, 1),) + self._elements[col])
            hit = self._ids[w]
            self._left[key] = hit
        return hit

    def _u_times(self, i: int, vec):
        if self.p == 2:
            return frozenset(self._times_generator(i, c) for c in vec) ^ vec
        out = {self._times_generator(i, c): v for c, v in vec.items()}
        for c, v in vec.items():
            nv = (out.get(c, 0) - v) % self.p
            if nv:
                out[c] = nv
            else:
                out.pop(c, None)
        return out

    def _echelon(self):
        return BitsetEchelon() if self.p == 2 else SparseEchelon(self.p)

    def _row(self, vec):
        return bits_from_columns(vec) if self.p == 2 else vec

    def level(self, l: int) -> list:
        """A basis of V_l made of products u_i * b for basis vectors b of V_{l-1}."""
        while len(self._levels) <= l:
            k = len(self._levels)
            self._grow(k)
            ech = self._echelon()
            basis = []
            for b in self._levels[k - 1]:
                for i in range(1, self.spec.m + 1):
                    v = self._u_times(i, b)
                    if v and ech.add(self._row(v)):
                        basis.append(v)
            self._levels.append(basis)
            log.debug("V_%d: dim %d, ball %d", k, len(basis), self.ball_size)
        return self._levels[l]

    def tail_ranks(self, K: int) -> list:
        """``r[k] = dim(V_k + ... + V_K)`` for k = 1..K+1 (index 0 unused)."""
        if K not in self._ranks:
            for l in range(K + 1):
                self.level(l)
            ech = self._echelon()
            r = [0] * (K + 2)
            for k in range(K, 0, -1):
                for v in self._levels[k]:
                    ech.add(self._row(v))
                r[k] = ech.rank
            self._ranks[K] = r
        return self._ranks[K]

    def truncated_dim(self, n: int, K: int) -> int:
        """D_n(K)."""
        if not 1 <= n < K + 1:
            raise ValueError("need 1 <= n <= K")
        r = self.tail_ranks(K)
        return r[n] - r[n + 1]


@dataclass
class OracleResult:
    degree: int
    dim: int
    truncation: int
    stabilized: bool
    history: list = field(default_factory=list)


def gr_dim_oracle(
    spec: GroupSpec,
    n: int,
    max_truncation: Optional[int] = None,
    budget: int = DEFAULT_BALL_BUDGET,
    filtration: Optional[AugmentationFiltration] = None,
) -> OracleResult:
    """dim I^n / I^(n+1) for the augmentation ideal I of GF(p)[G].

    Degree 0 is the ground field.  For n >= 1 the truncation K starts at n+1
    and grows until D_n(K) = D_n(K-1) = D_n(K-2), or until ``max_truncation``
    (default n + 6) is passed, in which case the result is flagged as not
    stabilized.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if filtration is None:
        filtration = AugmentationFiltration(spec, budget)
    elif filtration.spec != spec:
        raise ValueError("filtration belongs to a different group")
    if n == 0:
        return OracleResult(0, 1, 0, True)
    K_max = n + 6 if max_truncation is None else max_truncation
    history = []
    K = n + 1
    while K <= K_max:
        value = filtration.truncated_dim(n, K)
        if history and value > history[-1][1]:
            log.warning("D_%d not monotone: %d at K=%d after %d", n, value, K, history[-1][1])
        history.append((K, value))
        log.info("D_%d(%d) = %d", n, K, value)
        if len(history) >= 3 and history[-1][1] == history[-2][1] == history[-3][1]:
            return OracleResult(n, value, K, True, history)
        K += 1
    last_K, last = history[-1] if history else (K, -1)
    return OracleResult(n, last, last_K, False, history)


@dataclass
class FiltrationReport:
    degrees: list

    @property
    def stabilized(self) -> bool:
        return all(r.stabilized for r in self.degrees)


def filtration_report(spec: GroupSpec, N: int, budget: int = DEFAULT_BALL_BUDGET) -> FiltrationReport:
    filt = AugmentationFiltration(spec, budget)
    return FiltrationReport([gr_dim_oracle(spec, n, filtration=filt) for n in range(1, N + 1)])


@dataclass
class QuillenRow:
    degree: int
    oracle: int
    bruteforce: int
    formula: int
    truncation: int
    stabilized: bool

    @property
    def agree(self) -> bool:
        return self.stabilized and self.oracle == self.bruteforce == self.formula


@dataclass
class QuillenReport:
    p: int
    rows: list

    @property
    def passed(self) -> bool:
        return all(r.agree for r in self.rows)

    def failures(self) -> list:
        return [r for r in self.rows if not r.agree]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "rows": [
                {"degree": r.degree, "oracle": r.oracle, "bruteforce": r.bruteforce,
                 "formula": r.formula, "truncation": r.truncation,
                 "stabilized": r.stabilized, "agree": r.agree}
                for r in self.rows
            ],
            "pass": self.passed,
        }


def quillen_check(
    K: SimplicialComplex,
    p: int,
    N: int,
    word_budget: int = DEFAULT_WORD_BUDGET,
    ball_budget: int = DEFAULT_BALL_BUDGET,
) -> QuillenReport:
    """Compare, degree by degree up to N, the augmentation-filtration oracle on
    GF(p)[Z_p^K] with brute-force and clique-formula dimensions of the
    truncated polynomial graph product."""
    check_prime(p)
    spec = GroupSpec.uniform(K, p)
    P = presentation_from_complex(K, "trunc", p)
    H = hilbert_series_formula(P, N)
    filt = AugmentationFiltration(spec, ball_budget)
    rows = []
    for n in range(1, N + 1):
        res = gr_dim_oracle(spec, n, filtration=filt)
        brute = graded_dim_bruteforce(P, n, word_budget)
        rows.append(QuillenRow(n, res.dim, brute, H[n], res.truncation, res.stabilized))
    return QuillenReport(p, rows)
