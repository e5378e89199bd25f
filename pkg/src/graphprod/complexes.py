"""Finite simplicial complexes and simple graphs on the vertex set {1..m}.

Faces are stored explicitly as sorted tuples.  Complexes in this package are
small (at most a dozen vertices), so every query is answered by direct
enumeration over the face set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

Face = tuple


def _check_vertices(m: int, vertices: Iterable[int]) -> tuple:
    vs = tuple(sorted(set(vertices)))
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
            raise ValueError(f"vertex {v!r} out of range 1..{m}")
    return vs


@dataclass(frozen=True)
class Graph:
    m: int
    edges: frozenset

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("vertex count must be nonnegative")
        for e in self.edges:
            i, j = e
            if not (1 <= i < j <= self.m):
                raise ValueError(f"invalid edge {e!r}")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[Sequence[int]]) -> "Graph":
        canon = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            canon.add((min(i, j), max(i, j)))
        return cls(m, frozenset(canon))

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbours(self) -> dict:
        nbrs = {v: set() for v in range(1, self.m + 1)}
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces on {1..m}, always containing the
    empty face and every vertex."""

    m: int
    faces: frozenset

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("vertex count must be nonnegative")

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def facets(self) -> list:
        fs = [f for f in self.faces if f and not any(
            len(g) == len(f) + 1 and set(f) <= set(g) for g in self.faces)]
        return sorted(fs, key=lambda f: (len(f), f))

    def f_vector(self) -> tuple:
        """Face counts by size 1, 2, ... (the empty face is not counted)."""
        counts = [0] * (self.dimension + 1)
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def edges(self) -> list:
        return sorted(f for f in self.faces if len(f) == 2)

    def to_document(self, name=None) -> dict:
        doc = {"m": self.m, "facets": [list(f) for f in self.facets()]}
        if name is not None:
            doc["name"] = name
        return doc


def from_facets(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``facets`` together with all vertices and the
    empty face."""
    if m < 0:
        raise ValueError("vertex count must be nonnegative")
    faces = {()}
    faces.update((v,) for v in range(1, m + 1))
    for facet in facets:
        vs = _check_vertices(m, facet)
        for k in range(len(vs) + 1):
            faces.update(combinations(vs, k))
    return SimplicialComplex(m, frozenset(faces))


def simplex(m: int) -> SimplicialComplex:
    return from_facets(m, [range(1, m + 1)] if m else [])


def discrete(m: int) -> SimplicialComplex:
    """``m`` disjoint points."""
    return from_facets(m, [])


def simplex_boundary(m: int) -> SimplicialComplex:
    return from_facets(m, combinations(range(1, m + 1), m - 1))


def path(m: int) -> SimplicialComplex:
    return from_facets(m, [(i, i + 1) for i in range(1, m)])


def cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_facets(m, [(i, i % m + 1) for i in range(1, m + 1)])


def one_skeleton(K: SimplicialComplex) -> Graph:
    return Graph(K.m, frozenset(f for f in K.faces if len(f) == 2))


def cliques(G: Graph) -> list:
    """All vertex sets of complete subgraphs of ``G``, including the empty set."""
    nbrs = G.neighbours()
    out = []

    def extend(clique, candidates):
        out.append(clique)
        for v in candidates:
            extend(clique + (v,), [w for w in candidates if w > v and w in nbrs[v]])

    extend((), list(range(1, G.m + 1)))
    return out


def clique_complex(G: Graph) -> SimplicialComplex:
    return SimplicialComplex(G.m, frozenset(cliques(G)))


def missing_faces(K: SimplicialComplex) -> list:
    """Minimal non-faces, each sorted; the list is sorted lexicographically."""
    out = set()
    for f in K.faces:
        start = f[-1] + 1 if f else 1
        for v in range(start, K.m + 1):
            cand = f + (v,)
            if cand in K.faces:
                continue
            if all(cand[:k] + cand[k + 1:] in K.faces for k in range(len(cand))):
                out.add(cand)
    return sorted(out)


def is_flag(K: SimplicialComplex) -> bool:
    return all(len(f) == 2 for f in missing_faces(K))


def full_subcomplex(K: SimplicialComplex, J: Iterable[int]) -> SimplicialComplex:
    """Faces of ``K`` inside ``J``, re-indexed onto 1..|J| in increasing order."""
    js = _check_vertices(K.m, J)
    relabel = {v: k + 1 for k, v in enumerate(js)}
    jset = set(js)
    faces = frozenset(tuple(relabel[v] for v in f) for f in K.faces if jset.issuperset(f))
    return SimplicialComplex(len(js), faces)


def components(K: SimplicialComplex, J: Iterable[int]) -> list:
    """Connected components of the one-skeleton of the full subcomplex on
    ``J``, in original vertex labels; each sorted, list sorted by minimum."""
    js = _check_vertices(K.m, J)
    parent = {v: v for v in js}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in combinations(js, 2):
        if (a, b) in K.faces:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for v in js:
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


def reduced_h0_rank(K: SimplicialComplex, J: Iterable[int]) -> int:
    """Number of components of K_J minus one; zero for the empty subset."""
    comps = components(K, J)
    return max(len(comps) - 1, 0)


def lex_bfs(G: Graph) -> list:
    """A lexicographic breadth-first search ordering of the vertices."""
    nbrs = G.neighbours()
    labels = {v: [] for v in range(1, G.m + 1)}
    order = []
    remaining = set(labels)
    for step in range(G.m, 0, -1):
        # ties broken by smallest vertex for determinism
        v = max(remaining, key=lambda u: (labels[u], -u))
        remaining.discard(v)
        order.append(v)
        for w in nbrs[v]:
            if w in remaining:
                labels[w].append(step)
    return order


def is_perfect_elimination_ordering(G: Graph, order: Sequence[int]) -> bool:
    nbrs = G.neighbours()
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = [w for w in nbrs[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        if any(w != u and w not in nbrs[u] for w in later):
            return False
    return True


def is_chordal(G: Graph) -> bool:
    """True iff the reverse of a Lex-BFS ordering eliminates perfectly."""
    return is_perfect_elimination_ordering(G, lex_bfs(G)[::-1])


def substitution_complex(K: SimplicialComplex, parts: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """Substitute complex ``parts[j-1]`` for vertex ``j`` of ``K``.

    Vertices of part ``j`` become the consecutive block following those of
    parts ``1..j-1``.
    """
    if len(parts) != K.m:
        raise ValueError(f"expected {K.m} parts, got {len(parts)}")
    offsets = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.m
    shifted = [
        [tuple(v + off for v in f) for f in part.faces]
        for part, off in zip(parts, offsets)
    ]
    faces = set()
    for J in K.faces:
        for choice in product(*(shifted[j - 1] for j in J)):
            faces.add(tuple(sorted(v for f in choice for v in f)))
    return SimplicialComplex(total, frozenset(faces))


def disjoint_union(*parts: SimplicialComplex) -> SimplicialComplex:
    return substitution_complex(discrete(len(parts)), parts)


def join(*parts: SimplicialComplex) -> SimplicialComplex:
    return substitution_complex(simplex(len(parts)), parts)
