"""Brute-force re-counting harness for the whole-vector construction.

Every claim is re-established from scratch here: the constructed complex is
fully closed and re-counted, the coloring is re-checked face by face, and
balancedness is confirmed with the exact chromatic solver whenever the
skeleton is small enough.  Discrepancies become failure records, never
assertions, so a bug surfaces as a replayable counterexample.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from math import comb

from .complexes import (
    ColoredComplex,
    check_coloring,
    chromatic_number,
    face_vector,
    one_skeleton,
)
from .construct import construct_from_vector
from .errors import GuardExceeded
from .graphs import Graph, clique_vector, graph6_encode, _clique_counts
from .limits import CHROMATIC_CAP, face_guard
from .revlex import LevelSpec, colored_revlex_complex, revlex_complex

EXHAUSTIVE_LIMIT = 7
RANDOM_VERTEX_LIMIT = 24
RECORD_RETENTION_LIMIT = 100_000


@dataclass(frozen=True)
class GraphRecord:
    """Outcome of verifying one graph; all flags True means the twin checked out."""

    graph_id: str
    clique_vec: tuple[int, ...]
    colors: int
    margins: tuple[int, ...]
    face_vec: tuple[int, ...]
    vectors_equal: bool
    coloring_ok: bool
    balanced_ok: bool
    error: str = ""

    @property
    def ok(self) -> bool:
        return (
            self.vectors_equal and self.coloring_ok and self.balanced_ok and not self.error
        )


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate of per-graph records; ``records`` is None on huge runs where
    only the failures are retained (each failure stays fully replayable)."""

    total: int
    passes: int
    failures: tuple[GraphRecord, ...]
    records: tuple[GraphRecord, ...] | None

    @property
    def ok(self) -> bool:
        return not self.failures


def _balanced_flag(cc: ColoredComplex) -> bool:
    """Balancedness of a constructed complex.

    Exact chromatic check when the skeleton is small; beyond the exact cap the
    proper coloring itself certifies chromatic <= colors used, which pins the
    chromatic number whenever colors used <= dimension + 1.
    """
    cx = cc.complex
    if not cx.vertices:
        return True
    if len(cx.vertices) <= CHROMATIC_CAP:
        return chromatic_number(one_skeleton(cx)) == cx.dimension + 1
    return check_coloring(cc) and cc.colors_used() <= cx.dimension + 1


def verify_graph(g: Graph, graph_id: str | None = None) -> GraphRecord:
    """Run the construction on one graph and recount everything brute force."""
    gid = graph_id if graph_id is not None else f"g6:{graph6_encode(g)}"
    try:
        cv = clique_vector(g)
    except GuardExceeded as exc:
        return GraphRecord(gid, (), 0, (), (), False, False, False, error=str(exc))
    return _verified_record(cv, gid)


def _verified_record(cv: tuple[int, ...], gid: str) -> GraphRecord:
    try:
        cc, report = construct_from_vector(cv)
    except GuardExceeded as exc:
        return GraphRecord(gid, cv, len(cv) - 1, (), (), False, False, False, error=str(exc))
    return GraphRecord(
        graph_id=gid,
        clique_vec=cv,
        colors=report.colors,
        margins=report.margins,
        face_vec=report.face_vec,
        vectors_equal=report.face_vec == cv,
        coloring_ok=check_coloring(cc),
        balanced_ok=_balanced_flag(cc),
    )


def iter_exhaustive_records(n: int):
    """Per-graph records over every labeled graph on n vertices, in mask order.

    The construction and its recount are memoized per clique vector: the
    constructed complex is a function of the vector alone, while the vector
    itself is recounted from scratch for every single graph.
    """
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive verification capped at n <= {EXHAUSTIVE_LIMIT}")
    pairs = list(combinations(range(n), 2))
    cap = face_guard()
    cache: dict[tuple[int, ...], GraphRecord] = {}
    for mask in range(1 << comb(n, 2)):
        adj = [0] * n
        m = mask
        for i, j in pairs:
            if m & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            m >>= 1
        cv = tuple(_clique_counts(adj, n, cap))
        proto = cache.get(cv)
        if proto is None:
            proto = _verified_record(cv, gid="")
            cache[cv] = proto
        yield replace(proto, graph_id=f"mask:{n}:{mask}")


def exhaustive_verify(n: int) -> VerificationReport:
    """Verify every labeled graph on n vertices; aggregation is mask-ordered."""
    total = passes = 0
    failures: list[GraphRecord] = []
    retain = (1 << comb(n, 2)) <= RECORD_RETENTION_LIMIT
    records: list[GraphRecord] | None = [] if retain else None
    for record in iter_exhaustive_records(n):
        total += 1
        if record.ok:
            passes += 1
        else:
            failures.append(record)
        if records is not None:
            records.append(record)
    return VerificationReport(
        total=total,
        passes=passes,
        failures=tuple(failures),
        records=tuple(records) if records is not None else None,
    )


def random_graph(n: int, p: Fraction, key: str) -> Graph:
    """Deterministic G(n, p) sample; ``key`` seeds a dedicated generator."""
    rng = random.Random(key)
    num, den = p.numerator, p.denominator
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.randrange(den) < num:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n=n, adj=tuple(adj))


def iter_random_records(n: int, p, trials: int, seed: int):
    """Seeded, reproducible stream of verification records on G(n, p) samples.

    Each trial draws from its own generator keyed by (seed, trial index), so
    any sub-range of trials can be reproduced independently.
    """
    if n > RANDOM_VERTEX_LIMIT:
        raise ValueError(f"random verification capped at n <= {RANDOM_VERTEX_LIMIT}")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    for t in range(trials):
        g = random_graph(n, p, key=f"{seed}:{t}")
        yield verify_graph(g, graph_id=f"g6:{graph6_encode(g)}")


def random_verify(n: int, p, trials: int, seed: int) -> VerificationReport:
    """Seeded random spot check; identical arguments give identical reports."""
    records = list(iter_random_records(n, p, trials, seed))
    failures = tuple(r for r in records if not r.ok)
    return VerificationReport(
        total=len(records),
        passes=len(records) - len(failures),
        failures=failures,
        records=tuple(records),
    )


def oracle_face_count(spec: LevelSpec, colors: int | None = None,
                      guard: int | None = None) -> tuple[int, ...]:
    """Face vector of the (colored) rev-lex complex by full closure.

    Entirely independent of the canonical-representation bound formulas; this
    is the ground truth the bounds are validated against.
    """
    if colors is None:
        cx = revlex_complex(spec)
    else:
        cx = colored_revlex_complex(spec, colors).complex
    return face_vector(cx, guard)
