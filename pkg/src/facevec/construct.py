"""Turns a graph's clique counts into colored complexes with the same counts.

Two entry points: ``construct_pair`` matches the clique counts at one pair of
adjacent levels (k, k+1) with a complex on a limited color budget, following
the inductive cone construction step by step and recording an auditable
trace; ``construct_balanced`` matches the whole clique vector at once with a
single multi-level colored rev-lex complex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .combinat import ffk_bound
from .complexes import ColoredComplex, Complex, Face, face_vector, vec_entry
from .errors import InvariantViolation
from .graphs import Graph, clique_vector, graph_link, remove_vertices
from .revlex import LevelSpec, colored_revlex_complex, first_permissible_ksets


@dataclass(frozen=True)
class TraceStep:
    """One cone step: vertex processed, and the two face counts of its link."""

    vertex: int
    a: int  # k-face count of the link within the shrinking graph
    b: int  # (k-1)-face count of the same link
    added_vertex: int = 0  # label of the fresh cone vertex, 0 in audits


@dataclass(frozen=True)
class ConstructionTrace:
    """Auditable record of one recursion level of the pair construction."""

    kind: str  # "vertices" | "flat" | "cone"
    k: int
    colors: int
    base_levels: tuple[tuple[int, int], ...]
    pivot: int | None = None
    non_neighbors: tuple[int, ...] = ()
    steps: tuple[TraceStep, ...] = ()
    sub: "ConstructionTrace | None" = None

    def cone_levels(self, step: TraceStep) -> tuple[tuple[int, int], ...]:
        """LevelSpec of the rev-lex complex coned below the step's new vertex."""
        if self.k >= 2:
            return ((self.k - 1, step.b), (self.k, step.a))
        return ((self.k, step.a),)


def construct_pair(g: Graph, r: int, k: int) -> tuple[ColoredComplex, ConstructionTrace]:
    """r-colorable complex matching g's clique counts at levels k and k+1.

    Requires that g has no clique on r+1 vertices.  Inductive construction:
    pick the pivot vertex in the most (k+1)-cliques, peel the pivot and its
    non-neighbors one at a time, realize the pivot link's counts as a colored
    rev-lex complex on r-1 colors, then cone one fresh color-r vertex per
    peeled vertex over an initial segment sized by that vertex's link counts.
    """
    if r < 1:
        raise ValueError("need a positive color budget")
    if k < 0:
        raise ValueError("need k >= 0")
    cv = clique_vector(g)
    if vec_entry(cv, r + 1) > 0:
        raise ValueError(f"graph has a clique on {r + 1} vertices; budget {r} infeasible")
    return _pair(g, cv, r, k)


def _pair(g: Graph, cv: tuple[int, ...], r: int, k: int) -> tuple[ColoredComplex, ConstructionTrace]:
    ck, ck1 = vec_entry(cv, k), vec_entry(cv, k + 1)

    if k == 0:
        levels = LevelSpec.of((1, vec_entry(cv, 1)))
        cc = colored_revlex_complex(levels, r)
        return cc, ConstructionTrace(kind="vertices", k=0, colors=r, base_levels=levels.entries)

    if ck1 == 0:
        levels = LevelSpec.of((k, ck))
        cc = colored_revlex_complex(levels, r)
        return cc, ConstructionTrace(kind="flat", k=k, colors=r, base_levels=levels.entries)

    # Pivot: the vertex in the most (k+1)-cliques, i.e. whose link has the
    # most k-cliques; ties go to the lowest label for reproducibility.
    labels = g.vertex_labels
    link_count = {v: vec_entry(clique_vector(graph_link(g, v)), k) for v in labels}
    v0 = min(labels, key=lambda v: (-link_count[v], v))
    if link_count[v0] == 0:
        raise InvariantViolation("pivot lies in no (k+1)-clique despite c_{k+1} > 0")
    i0 = g.index_of(v0)
    non_neighbors = [v for v in labels if v != v0 and not g.adj[i0] >> g.index_of(v) & 1]

    # Peel v_0, v_1, ..., v_s, recording each peeled vertex's link counts.
    steps: list[tuple[int, int, int]] = []
    current = g
    for v in [v0] + non_neighbors:
        lv = clique_vector(graph_link(current, v))
        steps.append((v, vec_entry(lv, k), vec_entry(lv, k - 1)))
        current = remove_vertices(current, [v])

    link_graph = current  # = the link of v0 in g
    link_cv = clique_vector(link_graph)
    ck_link, ck1_link = vec_entry(link_cv, k), vec_entry(link_cv, k + 1)
    if ck1_link >= ck1:
        raise InvariantViolation("peeling failed to reduce the (k+1)-face count")

    # Inner induction on the (k+1)-count; its complex is discarded, the
    # trace is what makes the recursion auditable.
    _, sub_trace = _pair(link_graph, link_cv, r - 1, k)

    # Base complex: the link's counts at (k, k+1), with the (k-1)-level padded
    # up to cover both the forced shadow and every b_i <= c_{k-1}(g).
    entries: list[tuple[int, int]] = []
    pad = 0
    if k >= 2:
        shadow: set[Face] = set()
        for f in first_permissible_ksets(ck_link, k, r - 1):
            shadow.update(combinations(f, k - 1))
        for f in first_permissible_ksets(ck1_link, k + 1, r - 1):
            shadow.update(combinations(f, k - 1))
        pad = max(vec_entry(cv, k - 1), len(shadow))
        entries.append((k - 1, pad))
        if ffk_bound(pad, k - 1, r - 1) < ck_link:
            raise InvariantViolation("padded level cannot support the link's k-faces")
    entries.append((k, ck_link))
    entries.append((k + 1, ck1_link))
    if ffk_bound(ck_link, k, r - 1) < ck1_link:
        raise InvariantViolation("link counts violate the colored shadow bound")
    levels = LevelSpec.of(*entries)
    base = colored_revlex_complex(levels, r - 1)

    # Cone one fresh color-r vertex per peeled vertex, latest peel first.
    facets: set[Face] = set(base.complex.facets)
    fresh = max((v for f in base.complex.facets for v in f), default=0)
    recorded: list[TraceStep] = [TraceStep(0, 0, 0)] * len(steps)
    for i in range(len(steps) - 1, -1, -1):
        v, a, b = steps[i]
        if a > ck_link:
            raise InvariantViolation(f"step clique count {a} exceeds the base's {ck_link}")
        if k >= 2:
            if b > pad:
                raise InvariantViolation(f"step shadow count {b} exceeds the padded level {pad}")
            if ffk_bound(b, k - 1, r - 1) < a:
                raise InvariantViolation(f"step counts ({a}, {b}) violate the colored bound")
        fresh += 1
        cone_base: list[Face] = [()]
        cone_base += first_permissible_ksets(a, k, r - 1)
        if k >= 2:
            cone_base += first_permissible_ksets(b, k - 1, r - 1)
        facets.update(f + (fresh,) for f in cone_base)
        recorded[i] = TraceStep(vertex=v, a=a, b=b, added_vertex=fresh)

    cx = Complex.from_faces(facets)
    coloring = dict(base.coloring)
    for step in recorded:
        coloring[step.added_vertex] = r
    trace = ConstructionTrace(
        kind="cone",
        k=k,
        colors=r,
        base_levels=levels.entries,
        pivot=v0,
        non_neighbors=tuple(non_neighbors),
        steps=tuple(recorded),
        sub=sub_trace,
    )
    return ColoredComplex(complex=cx, colors=r, coloring=coloring), trace


@dataclass(frozen=True)
class BalancedReport:
    """Input and output counts of a whole-vector construction, with margins."""

    colors: int
    clique_vec: tuple[int, ...]
    face_vec: tuple[int, ...]
    margins: tuple[int, ...] = field(default=())  # ffk bound slack per level pair


def construct_from_vector(cv: tuple[int, ...],
                          guard: int | None = None) -> tuple[ColoredComplex, BalancedReport]:
    """Whole-vector construction from a clique vector alone.

    The output is a function of the vector, not of the graph it came from;
    ``construct_balanced`` is this plus the clique count of its input.
    """
    r = len(cv) - 1
    margins = []
    for i in range(1, r):
        slack = ffk_bound(cv[i], i, r) - cv[i + 1]
        if slack < 0:
            raise InvariantViolation(f"clique vector {cv} violates the colored bound at level {i}")
        margins.append(slack)
    if r == 0:
        cc = ColoredComplex(complex=Complex.from_faces([()]), colors=0, coloring={})
    else:
        cc = colored_revlex_complex(LevelSpec.of(*((i, cv[i]) for i in range(1, r + 1))), r)
    report = BalancedReport(
        colors=r,
        clique_vec=cv,
        face_vec=face_vector(cc.complex, guard),
        margins=tuple(margins),
    )
    return cc, report


def construct_balanced(g: Graph, guard: int | None = None) -> tuple[ColoredComplex, BalancedReport]:
    """Balanced complex whose face vector equals g's clique vector.

    With r the clique number, checks the colored shadow bound between every
    adjacent pair of clique counts (these always hold; a failure is a bug),
    then realizes all levels at once as one r-colored rev-lex complex, which
    equals the union of the per-pair complexes because every level is an
    initial segment of the same enumeration.
    """
    return construct_from_vector(clique_vector(g, guard), guard)
