"""Graph products of cyclic groups and their word problem.

A group is given by a simplicial complex (only its one-skeleton matters) and
an order for every vertex: ``None`` for the infinite cyclic group, or an
integer ``n >= 2``.  Elements are stored as reduced syllable sequences in
lexicographic normal form.

Normalisation runs in two passes.  Syllables are pushed one at a time onto a
reduced word; an incoming syllable merges with the nearest syllable of the
same vertex that it can reach by commuting leftwards, and the merged syllable
disappears when its exponent becomes zero.  The reduced word is then
rearranged into the lexicographically least word obtainable by swapping
adjacent commuting syllables, which is a topological sort of the dependency
order that always emits the smallest available vertex.
"""

from __future__ import annotations

import heapq
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .complexes import SimplicialComplex, one_skeleton
from .errors import BudgetExceededError

DEFAULT_BALL_BUDGET = 2_000_000


@dataclass(frozen=True)
class GroupSpec:
    complex: SimplicialComplex
    orders: tuple
    _commute: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        orders = tuple(self.orders)
        if len(orders) != self.complex.m:
            raise ValueError(f"expected {self.complex.m} orders, got {len(orders)}")
        for n in orders:
            if n is not None and (not isinstance(n, int) or n < 2):
                raise ValueError(f"invalid vertex order {n!r}")
        object.__setattr__(self, "orders", orders)
        edges = one_skeleton(self.complex).edges
        object.__setattr__(self, "_commute", frozenset(edges | {(j, i) for i, j in edges}))

    @classmethod
    def racg(cls, K: SimplicialComplex) -> "GroupSpec":
        return cls(K, (2,) * K.m)

    @classmethod
    def raag(cls, K: SimplicialComplex) -> "GroupSpec":
        return cls(K, (None,) * K.m)

    @classmethod
    def uniform(cls, K: SimplicialComplex, n: Optional[int]) -> "GroupSpec":
        return cls(K, (n,) * K.m)

    @property
    def m(self) -> int:
        return self.complex.m

    def commute(self, i: int, j: int) -> bool:
        return (i, j) in self._commute

    def order(self, i: int) -> Optional[int]:
        return self.orders[i - 1]

    def reduce_exponent(self, i: int, e: int) -> int:
        n = self.orders[i - 1]
        return e if n is None else e % n


def reduce_syllables(spec: GroupSpec, raw: Iterable[Sequence[int]]) -> list:
    """Push syllables onto a reduced word, merging and cancelling as they meet."""
    out = []
    for v, e in raw:
        if not 1 <= v <= spec.m:
            raise ValueError(f"generator index {v} out of range 1..{spec.m}")
        e = spec.reduce_exponent(v, e)
        if e == 0:
            continue
        for k in range(len(out) - 1, -1, -1):
            w, f = out[k]
            if w == v:
                merged = spec.reduce_exponent(v, f + e)
                if merged:
                    out[k] = (v, merged)
                else:
                    del out[k]
                break
            if not spec.commute(w, v):
                out.append((v, e))
                break
        else:
            out.append((v, e))
    return out


def lex_least(spec: GroupSpec, syllables: Sequence) -> tuple:
    """Lexicographically least rearrangement by commutation of a reduced word."""
    n = len(syllables)
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for a in range(n):
        va = syllables[a][0]
        for b in range(a + 1, n):
            vb = syllables[b][0]
            if va == vb or not spec.commute(va, vb):
                succ[a].append(b)
                indeg[b] += 1
    heap = [(syllables[k][0], k) for k in range(n) if indeg[k] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, k = heapq.heappop(heap)
        out.append(syllables[k])
        for b in succ[k]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (syllables[b][0], b))
    return tuple(out)


def _canonical(spec: GroupSpec, raw) -> tuple:
    return lex_least(spec, reduce_syllables(spec, raw))


@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    syllables: tuple

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_word(self.syllables)

    def __lt__(self, other: "GroupElement") -> bool:
        return (len(self.syllables), self.syllables) < (len(other.syllables), other.syllables)

    @property
    def is_identity(self) -> bool:
        return not self.syllables


def identity(spec: GroupSpec) -> GroupElement:
    return GroupElement(spec, ())


def generator(spec: GroupSpec, i: int) -> GroupElement:
    if not 1 <= i <= spec.m:
        raise ValueError(f"generator index {i} out of range 1..{spec.m}")
    return GroupElement(spec, ((i, 1),))


def normal_form(spec: GroupSpec, raw_word: Iterable[Sequence[int]]) -> GroupElement:
    return GroupElement(spec, _canonical(spec, raw_word))


def _same_spec(g: GroupElement, h: GroupElement) -> None:
    if g.spec != h.spec:
        raise ValueError("group elements belong to different graph products")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _same_spec(g, h)
    return GroupElement(g.spec, _canonical(g.spec, g.syllables + h.syllables))


def inverse(g: GroupElement) -> GroupElement:
    return normal_form(g.spec, [(v, -e) for v, e in reversed(g.syllables)])


def power(g: GroupElement, k: int) -> GroupElement:
    if k < 0:
        g, k = inverse(g), -k
    return normal_form(g.spec, g.syllables * k)


def group_commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """The commutator g^-1 h^-1 g h."""
    _same_spec(g, h)
    gi, hi = inverse(g), inverse(h)
    return normal_form(g.spec, gi.syllables + hi.syllables + g.syllables + h.syllables)


def abelianization(g: GroupElement) -> tuple:
    sums = [0] * g.spec.m
    for v, e in g.syllables:
        sums[v - 1] += e
    return tuple(g.spec.reduce_exponent(v, s) for v, s in enumerate(sums, start=1))


def is_in_commutator_subgroup(g: GroupElement) -> bool:
    return not any(abelianization(g))


def syllable_length(spec: GroupSpec, v: int, e: int, positive: bool = False) -> int:
    n = spec.order(v)
    if n is None:
        return abs(e)
    return e if positive else min(e, n - e)


def word_length(g: GroupElement, positive: bool = False) -> int:
    """Length with respect to the generators and their inverses, or with
    respect to positive powers of the generators only."""
    if positive and any(g.spec.order(v) is None for v, _ in g.syllables):
        raise ValueError("positive length needs finite vertex orders")
    return sum(syllable_length(g.spec, v, e, positive) for v, e in g.syllables)


def enumerate_ball(
    spec: GroupSpec,
    radius: int,
    budget: int = DEFAULT_BALL_BUDGET,
    positive: bool = False,
) -> list:
    """Distinct elements reachable in at most ``radius`` generator steps, in
    breadth-first order.

    Steps multiply on the right by ``a_i`` or ``a_i^-1``; with ``positive``
    only by ``a_i`` (this requires finite orders).
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    steps = []
    for i in range(1, spec.m + 1):
        n = spec.order(i)
        if positive and n is None:
            raise ValueError("positive steps need finite vertex orders")
        steps.append((i, 1))
        if not positive and n != 2:
            steps.append((i, -1))
    seen = {(): 0}
    order = [()]
    frontier = deque([()])
    for _ in range(radius):
        nxt = deque()
        for word in frontier:
            for step in steps:
                w = _canonical(spec, word + (step,))
                if w not in seen:
                    if len(order) >= budget:
                        raise BudgetExceededError(
                            f"ball of radius {radius} exceeds {budget} elements")
                    seen[w] = len(order)
                    order.append(w)
                    nxt.append(w)
        frontier = nxt
    return [GroupElement(spec, w) for w in order]


_TOKEN = re.compile(r"a(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str) -> list:
    """Parse ``'a1 a2^-1 a1'`` into raw syllables ``[(1, 1), (2, -1), (1, 1)]``."""
    raw = []
    for tok in text.split():
        mt = _TOKEN.match(tok)
        if not mt:
            raise ValueError(f"cannot parse word token {tok!r}")
        raw.append((int(mt.group(1)), int(mt.group(2) or 1)))
    return raw


def format_word(syllables: Sequence) -> str:
    if not syllables:
        return "e"
    return " ".join(f"a{v}" if e == 1 else f"a{v}^{e}" for v, e in syllables)
