"""Simplicial complexes stored by their facets.

Faces are strictly ascending tuples of positive vertex labels; the empty
tuple is the empty face.  A complex that contains any face at all contains
the empty face; the complex with no faces whatsoever is represented by an
empty facet set and reports the empty face vector ().
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .errors import GuardExceeded
from .limits import CHROMATIC_CAP, face_guard

Face = tuple[int, ...]
FaceVector = tuple[int, ...]


def validate_face(face: Face) -> Face:
    """Reject anything that is not a strictly ascending tuple of labels >= 1."""
    face = tuple(face)
    for prev, cur in zip((0,) + face, face):
        if cur <= prev:
            raise ValueError(f"face must be strictly ascending positive labels: {face}")
    return face


def vec_entry(vec: tuple[int, ...], i: int) -> int:
    """Entry i of a face/clique vector, 0 beyond its length."""
    return vec[i] if 0 <= i < len(vec) else 0


@dataclass(frozen=True)
class Complex:
    """An abstract simplicial complex, canonically represented by its facets."""

    facets: frozenset[Face]

    @classmethod
    def from_faces(cls, faces) -> "Complex":
        """Build a complex whose face set is the downward closure of ``faces``.

        Dominated faces (subsets of another given face) are dropped so that
        equal complexes always compare equal.
        """
        pool: set[Face] = {validate_face(f) for f in faces}
        if not pool:
            return cls(frozenset())
        by_size: dict[int, set[Face]] = {}
        for f in pool:
            by_size.setdefault(len(f), set()).add(f)
        sizes = sorted(by_size, reverse=True)
        facets: set[Face] = set()
        dominated: set[Face] = set()
        for s in sizes:
            keep = by_size[s] - dominated
            facets |= keep
            lower = [s2 for s2 in sizes if s2 < s]
            for f in keep:
                for s2 in lower:
                    dominated.update(combinations(f, s2))
        return cls(frozenset(facets))

    @property
    def is_empty(self) -> bool:
        return not self.facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for both degenerate complexes."""
        return max((len(f) for f in self.facets), default=0) - 1

    def has_face(self, face: Face) -> bool:
        fs = set(validate_face(face))
        return any(fs <= set(facet) for facet in self.facets)


@dataclass(frozen=True, eq=True)
class ColoredComplex:
    """A complex together with a total vertex coloring into 1..colors."""

    complex: Complex
    colors: int
    coloring: dict[int, int]

    def colors_used(self) -> int:
        return len(set(self.coloring.values()))


def closure(c: Complex, guard: int | None = None) -> set[Face]:
    """Materialize every face of the complex, empty face included."""
    cap = face_guard() if guard is None else guard
    faces: set[Face] = set()
    for facet in c.facets:
        if 2 ** len(facet) > 4 * cap:
            raise GuardExceeded(f"facet on {len(facet)} vertices alone exceeds the face cap {cap}")
        for s in range(len(facet) + 1):
            faces.update(combinations(facet, s))
        if len(faces) > cap:
            raise GuardExceeded(f"closure exceeds the face cap {cap}")
    return faces


def face_vector(c: Complex, guard: int | None = None) -> FaceVector:
    """Exact face counts (c_0, c_1, ..., c_d) of the closure; () when empty."""
    faces = closure(c, guard)
    if not faces:
        return ()
    counts = [0] * (max(len(f) for f in faces) + 1)
    for f in faces:
        counts[len(f)] += 1
    return tuple(counts)


def link(c: Complex, face: Face) -> Complex:
    """Complex of faces disjoint from ``face`` whose union with it is a face."""
    face = validate_face(face)
    fs = set(face)
    hits = [tuple(v for v in facet if v not in fs) for facet in c.facets if fs <= set(facet)]
    if not hits:
        raise ValueError(f"{face} is not a face of the complex")
    return Complex.from_faces(hits)


def one_skeleton(c: Complex) -> graphs.Graph:
    """Underlying graph: all vertices, edges = two-element faces."""
    verts = c.vertices
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for facet in c.facets:
        for u, w in combinations(facet, 2):
            adj[index[u]] |= 1 << index[w]
            adj[index[w]] |= 1 << index[u]
    labels = None if verts == tuple(range(1, len(verts) + 1)) else verts
    return graphs.Graph(n=len(verts), adj=tuple(adj), labels=labels)


def is_flag(c: Complex, guard: int | None = None) -> bool:
    """True iff the complex equals the clique complex of its own 1-skeleton."""
    faces = closure(c, guard)
    if not faces:
        return True
    skel = one_skeleton(c)
    clique_faces = set(graphs.cliques(skel, guard))
    return faces == clique_faces


def chromatic_number(g: graphs.Graph) -> int:
    """Exact chromatic number by branch and bound; capped at small vertex counts."""
    n = g.n
    if n > CHROMATIC_CAP:
        raise ValueError(f"too many vertices for exact coloring: {n} > {CHROMATIC_CAP}")
    if n == 0:
        return 0
    if not any(g.adj):
        return 1

    # Greedy clique gives a valid lower bound, greedy coloring an upper bound.
    order = sorted(range(n), key=lambda v: -g.adj[v].bit_count())
    clique_mask, lb = 0, 0
    for v in order:
        if clique_mask & ~g.adj[v] == 0:
            clique_mask |= 1 << v
            lb += 1
    greedy: dict[int, int] = {}
    for v in order:
        taken = {greedy[u] for u in greedy if g.adj[v] >> u & 1}
        color = 1
        while color in taken:
            color += 1
        greedy[v] = color
    ub = max(greedy.values())

    adj = g.adj
    colors = [0] * n

    def colorable(i: int, used: int, k: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = 0
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            cu = colors[b.bit_length() - 1]
            if cu:
                taken |= 1 << cu
        # Allowing at most one brand-new color breaks color-class symmetry.
        for color in range(1, min(used + 1, k) + 1):
            if taken >> color & 1:
                continue
            colors[v] = color
            if colorable(i + 1, max(used, color), k):
                return True
            colors[v] = 0
        return False

    for k in range(lb, ub):
        if colorable(0, 0, k):
            return k
    return ub


def is_balanced(c: Complex) -> bool:
    """True iff the chromatic number of the 1-skeleton equals dimension + 1."""
    if not c.vertices:
        return True
    return chromatic_number(one_skeleton(c)) == c.dimension + 1


def check_coloring(cc: ColoredComplex) -> bool:
    """Totality, properness on the 1-skeleton, and color range, as one flag."""
    col = cc.coloring
    for v in cc.complex.vertices:
        if v not in col or not 1 <= col[v] <= cc.colors:
            return False
    # Properness: vertices sharing a face are pairwise adjacent, so every
    # facet must be rainbow.
    for facet in cc.complex.facets:
        if len({col[v] for v in facet}) != len(facet):
            return False
    return True
