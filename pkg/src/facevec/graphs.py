"""Graphs on labels 1..n with bitmask adjacency.

Clique enumeration is the workhorse: counts by size via recursive extension
over candidate masks, never storing the cliques unless faces are requested.
Graphs produced from other graphs (links, induced subgraphs) retain a label
map back to the original vertex names.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import GuardExceeded, InputFormatError
from .limits import face_guard

EXHAUSTIVE_CAP = 8  # labeled generation stops at 2^C(8,2) graphs
MASK_WIDTH_CAP = 64


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[i]`` is the neighbor bitmask of vertex i.

    Bits are 0-based internal indices; public labels are ``labels[i]`` when a
    label map is present and i + 1 otherwise.  Label maps are kept ascending
    so faces built from them stay sorted.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] | None = None

    def label(self, i: int) -> int:
        return self.labels[i] if self.labels is not None else i + 1

    def index_of(self, label: int) -> int:
        if self.labels is None:
            if not 1 <= label <= self.n:
                raise ValueError(f"vertex {label} not in graph on labels 1..{self.n}")
            return label - 1
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"vertex {label} not in graph with labels {self.labels}") from None

    @property
    def vertex_labels(self) -> tuple[int, ...]:
        return self.labels if self.labels is not None else tuple(range(1, self.n + 1))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            m = self.adj[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((self.label(i), self.label(j)))
                m >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n=n, adj=tuple(adj))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge set is the bits of ``mask`` over pairs in
        lexicographic order (1,2), (1,3), ..., (n-1,n)."""
        adj = [0] * n
        bit = 0
        for i in range(n):
            for j in range(i + 1, n):
                if mask >> bit & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
        return cls(n=n, adj=tuple(adj))

    def edge_mask(self) -> int:
        mask = 0
        bit = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adj[i] >> j & 1:
                    mask |= 1 << bit
                bit += 1
        return mask


def _clique_counts(adj: tuple[int, ...] | list[int], n: int, cap: int) -> list[int]:
    """Counts of cliques by size, c_0 = 1; recursive extension on bitmasks."""
    counts = [0] * (n + 1)
    counts[0] = 1
    total = 1
    if n:
        stack = [((1 << n) - 1, 0)]
        while stack:
            cand, size = stack.pop()
            nxt_size = size + 1
            while cand:
                b = cand & -cand
                cand ^= b
                counts[nxt_size] += 1
                total += 1
                if total > cap:
                    raise GuardExceeded(f"clique count exceeds the cap {cap}")
                rest = cand & adj[b.bit_length() - 1]
                if rest:
                    stack.append((rest, nxt_size))
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def clique_vector(g: Graph, guard: int | None = None) -> tuple[int, ...]:
    """Face vector of the clique complex: c_i counts the i-vertex cliques."""
    cap = face_guard() if guard is None else guard
    return tuple(_clique_counts(g.adj, g.n, cap))


def clique_number(g: Graph, guard: int | None = None) -> int:
    """Number of vertices in a largest clique; 0 for the empty graph."""
    return len(clique_vector(g, guard)) - 1


def cliques(g: Graph, guard: int | None = None):
    """Yield every clique as an ascending label tuple, the empty one included."""
    cap = face_guard() if guard is None else guard
    emitted = 0

    def extend(prefix: tuple[int, ...], cand: int):
        nonlocal emitted
        while cand:
            b = cand & -cand
            cand ^= b
            i = b.bit_length() - 1
            cur = prefix + (g.label(i),)
            emitted += 1
            if emitted > cap:
                raise GuardExceeded(f"clique count exceeds the cap {cap}")
            yield cur
            rest = cand & g.adj[i]
            if rest:
                yield from extend(cur, rest)

    yield ()
    if g.n:
        yield from extend((), (1 << g.n) - 1)


def _induced(g: Graph, keep: list[int]) -> Graph:
    """Induced subgraph on ascending internal indices ``keep``, labels retained."""
    pos = {old: new for new, old in enumerate(keep)}
    adj = [0] * len(keep)
    for new, old in enumerate(keep):
        m = g.adj[old]
        while m:
            b = m & -m
            m ^= b
            other = pos.get(b.bit_length() - 1)
            if other is not None:
                adj[new] |= 1 << other
    labels = tuple(g.label(i) for i in keep)
    if labels == tuple(range(1, len(keep) + 1)):
        return Graph(n=len(keep), adj=tuple(adj))
    return Graph(n=len(keep), adj=tuple(adj), labels=labels)


def graph_link(g: Graph, v: int) -> Graph:
    """Induced subgraph on the neighborhood of ``v`` (a vertex label)."""
    i = g.index_of(v)
    keep = [j for j in range(g.n) if g.adj[i] >> j & 1]
    return _induced(g, keep)


def remove_vertices(g: Graph, vs) -> Graph:
    """Induced subgraph on the complement of the label set ``vs``."""
    drop = {g.index_of(v) for v in vs}
    keep = [j for j in range(g.n) if j not in drop]
    return _induced(g, keep)


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with parts as even as possible.

    Vertices 1..n are assigned to parts in contiguous blocks, largest first.
    """
    from .combinat import turan_parts

    part_of = []
    for p, size in enumerate(turan_parts(n, r)):
        part_of.extend([p] * size)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if part_of[i] != part_of[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n=n, adj=tuple(adj))


def all_graphs(n: int):
    """All labeled graphs on n vertices, in increasing edge-mask order."""
    if n > EXHAUSTIVE_CAP:
        raise ValueError(f"exhaustive generation capped at n <= {EXHAUSTIVE_CAP}")
    for mask in range(1 << comb(n, 2)):
        yield Graph.from_edge_mask(n, mask)


# ---------------------------------------------------------------------------
# Parsing: edge-list and graph6 inputs.

def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse EdgeList or graph6 input; auto-detect by first meaningful byte.

    Edge-list input starts with a digit (its "n m" header); every valid
    graph6 byte is >= 63, so the two never collide.
    """
    if fmt is None:
        fmt = _detect_format(text)
    if fmt == "edges":
        return _parse_edge_list(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    raise InputFormatError(f"unknown graph format {fmt!r}")


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        return "edges" if stripped[0].isdigit() else "graph6"
    raise InputFormatError("empty graph input")


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append(stripped)
    return out


def _parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputFormatError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise InputFormatError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InputFormatError(f"edge-list header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise InputFormatError("vertex and edge counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise InputFormatError(f"header declares {m} edges but {len(body)} lines follow")
    adj = [0] * n
    seen: set[tuple[int, int]] = set()
    for line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise InputFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputFormatError(f"edge line must be 'u v', got {line!r}") from None
        if u == v:
            raise InputFormatError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputFormatError(f"edge ({u},{v}) out of range 1..{n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge {key} ignored", stacklevel=3)
            continue
        seen.add(key)
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    return Graph(n=n, adj=tuple(adj))


GRAPH6_HEADER = ">>graph6<<"


def _parse_graph6(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputFormatError("empty graph6 input")
    line = lines[0]
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    data = [ord(ch) - 63 for ch in line]
    if any(x < 0 or x > 63 for x in data):
        raise InputFormatError(f"invalid graph6 byte in {line!r}")
    if not data:
        raise InputFormatError("empty graph6 line")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    else:
        raise InputFormatError(f"truncated graph6 size in {line!r}")
    if n > MASK_WIDTH_CAP:
        raise InputFormatError(f"graph6 vertex count {n} beyond the {MASK_WIDTH_CAP}-vertex cap")
    need = (comb(n, 2) + 5) // 6
    if len(rest) != need:
        raise InputFormatError(f"graph6 body length {len(rest)}, expected {need} for n={n}")
    bits = []
    for x in rest:
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n=n, adj=tuple(adj))


def graph6_encode(g: Graph) -> str:
    """Standard graph6 line for a graph (no trailing newline)."""
    n = g.n
    if n > MASK_WIDTH_CAP:
        raise ValueError(f"graph6 encoding capped at {MASK_WIDTH_CAP} vertices here")
    if n <= 62:
        prefix = chr(n + 63)
    else:
        prefix = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for t in range(0, len(bits), 6):
        x = 0
        for b in bits[t:t + 6]:
            x = (x << 1) | b
        chars.append(chr(x + 63))
    return prefix + "".join(chars)
