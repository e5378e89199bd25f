"""Nested-commutator generators of the commutator subgroup of a right-angled
Coxeter group, their count, and the chordality verdict on freeness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .complexes import (
    SimplicialComplex,
    components,
    is_chordal,
    is_flag,
    one_skeleton,
    reduced_h0_rank,
)
from .words import (
    GroupElement,
    GroupSpec,
    format_word,
    generator,
    group_commutator,
    is_in_commutator_subgroup,
)


@dataclass(frozen=True, order=True)
class CommutatorDescriptor:
    """The commutator (g_{k_1}, (g_{k_2}, ... (g_j, g_i) ...))."""

    k_list: tuple
    j: int
    i: int

    @property
    def length(self) -> int:
        return len(self.k_list) + 2

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.k_list + (self.j, self.i)))

    def sort_key(self) -> tuple:
        return (self.length, self.k_list, self.j, self.i)

    def __str__(self) -> str:
        inner = f"(g{self.j},g{self.i})"
        for k in reversed(self.k_list):
            inner = f"(g{k},{inner})"
        return inner


def is_valid_descriptor(K: SimplicialComplex, d: CommutatorDescriptor) -> bool:
    """The side conditions: k_1 < ... < k_{l-2} < j > i, no k equals i, and i
    is the least vertex of its component in K restricted to the support,
    that component not containing j."""
    ks = d.k_list
    if list(ks) != sorted(set(ks)) or (ks and ks[-1] >= d.j):
        return False
    if not d.i < d.j or d.i in ks:
        return False
    for comp in components(K, d.support):
        if d.i in comp:
            return d.j not in comp and comp[0] == d.i
    return False


def enumerate_generators(K: SimplicialComplex) -> list:
    """All descriptors, ordered by (length, k_list, j, i)."""
    out = []
    for j in range(2, K.m + 1):
        for i in range(1, j):
            others = [v for v in range(1, j) if v != i]
            for r in range(len(others) + 1):
                for ks in combinations(others, r):
                    d = CommutatorDescriptor(ks, j, i)
                    if is_valid_descriptor(K, d):
                        out.append(d)
    out.sort(key=CommutatorDescriptor.sort_key)
    return out


def homology_count(K: SimplicialComplex) -> int:
    """Sum over all vertex subsets J of rank H~_0(K_J)."""
    verts = range(1, K.m + 1)
    return sum(reduced_h0_rank(K, J) for r in range(K.m + 1) for J in combinations(verts, r))


def realize_generator(spec: GroupSpec, d: CommutatorDescriptor, K: Optional[SimplicialComplex] = None) -> GroupElement:
    """Build the nested commutator right to left from (g_j, g_i)."""
    if K is not None and one_skeleton(K) != one_skeleton(spec.complex):
        raise ValueError("descriptor complex does not match the group")
    g = group_commutator(generator(spec, d.j), generator(spec, d.i))
    for k in reversed(d.k_list):
        g = group_commutator(generator(spec, k), g)
    return g


@dataclass
class GeneratorReport:
    descriptors: list
    count: int
    homology_sum: int
    chordal: bool
    free_verdict: bool
    flag: bool
    algebra_free_verdict: Optional[bool]
    realized: list

    @property
    def consistent(self) -> bool:
        return self.count == len(self.descriptors) == self.homology_sum

    def to_dict(self) -> dict:
        return {
            "descriptors": [
                {"k": list(d.k_list), "j": d.j, "i": d.i, "commutator": str(d)}
                for d in self.descriptors
            ],
            "count": self.count,
            "homology_sum": self.homology_sum,
            "count_equals_homology": self.consistent,
            "chordal": self.chordal,
            "commutator_subgroup_free": self.free_verdict,
            "flag": self.flag,
            "commutator_subalgebra_free": self.algebra_free_verdict,
            "realized_normal_forms": [format_word(g.syllables) for g in self.realized],
            "realized_in_commutator_subgroup": all(is_in_commutator_subgroup(g) for g in self.realized),
        }


def freeness_report(K: SimplicialComplex) -> GeneratorReport:
    descriptors = enumerate_generators(K)
    chordal = is_chordal(one_skeleton(K))
    flag = is_flag(K)
    spec = GroupSpec.racg(K)
    return GeneratorReport(
        descriptors=descriptors,
        count=len(descriptors),
        homology_sum=homology_count(K),
        chordal=chordal,
        free_verdict=chordal,
        flag=flag,
        algebra_free_verdict=chordal if flag else None,
        realized=[realize_generator(spec, d) for d in descriptors],
    )
