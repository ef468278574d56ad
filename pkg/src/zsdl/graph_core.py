"""Graph representation, graph6 codec, distances, and basic structural queries.

Vertices are dense integers 0..n-1 and adjacency is kept as one bitmask per
vertex, which every solver in the package leans on for speed. All types are
immutable after construction, so values can be shared freely across workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Malformed input or a violated operation precondition."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            m = self.adj[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                yield u, b.bit_length() - 1

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        """Return a copy with edge uv added."""
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `vertices`, relabeled to dense ids.

        Returns (subgraph, ids) where ids[new] is the original id.
        """
        ids = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(ids)}
        adj = [0] * len(ids)
        for i, v in enumerate(ids):
            m = self.adj[v]
            while m:
                b = m & -m
                m ^= b
                w = b.bit_length() - 1
                j = index.get(w)
                if j is not None:
                    adj[i] |= 1 << j
        return Graph(len(ids), tuple(adj)), ids

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return _reach(self.adj, 0).bit_count() == self.n


def bits(mask: int) -> tuple[int, ...]:
    """Vertex ids of the set bits of `mask`, ascending."""
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length() - 1)
    return tuple(out)


def _reach(adj: Sequence[int], start: int) -> int:
    """Bitmask of vertices reachable from `start`."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def d(self, u: int, v: int) -> int:
        return self.rows[u][v]


class GraphKind(Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    OTHER = "other"


@dataclass(frozen=True)
class GraphClass:
    kind: GraphKind
    cycle_rank: int


GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


def parse_graph6(text: str) -> Graph:
    """Parse a one-line graph6 string (optional >>graph6<< header, n <= 62)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise GraphError(f"graph6 byte out of range in {s!r}")
    n = data[0]
    if n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 size byte encodes n={n} > {GRAPH6_MAX_N}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise GraphError(f"graph6 string too short: need {need} data bytes, got {len(body)}")
    if len(body) > need:
        raise GraphError(f"trailing garbage after graph6 data in {s!r}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # remaining bits in the last byte must be zero padding
    while k < 6 * need:
        if body[k // 6] >> (5 - k % 6) & 1:
            raise GraphError(f"nonzero padding bits in graph6 string {s!r}")
        k += 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    """Encode a labeled graph as graph6 (n <= 62)."""
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 codec limited to n <= {GRAPH6_MAX_N}, got n={g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nb = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nb += 1
            if nb == 6:
                out.append(chr(acc + 63))
                acc = 0
                nb = 0
    if nb:
        out.append(chr((acc << (6 - nb)) + 63))
    return "".join(out)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact hop distances by breadth-first search from every vertex."""
    if not g.is_connected():
        raise GraphError("distance matrix requires a connected graph")
    rows = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u]
            m = g.adj[u]
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                if dist[v] < 0:
                    dist[v] = du + 1
                    q.append(v)
        rows.append(tuple(dist))
    return DistanceMatrix(g.n, tuple(rows))


def leaves(g: Graph) -> tuple[int, ...]:
    """The degree-1 vertices, ascending; len() of this is sigma(G)."""
    return tuple(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def classify(g: Graph) -> GraphClass:
    """Cycle rank |E|-|V|+1 of a connected graph, bucketed tree/unicyclic/other."""
    if not g.is_connected():
        raise GraphError("classification requires a connected graph")
    rank = g.edge_count() - g.n + 1
    if rank == 0:
        kind = GraphKind.TREE
    elif rank == 1:
        kind = GraphKind.UNICYCLIC
    else:
        kind = GraphKind.OTHER
    return GraphClass(kind, rank)


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Maximal connected induced subgraphs, each with its original-id map."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = _reach(g.adj, start) & remaining
        comps.append(g.induced(bits(seen)))
        remaining &= ~seen
    return comps
