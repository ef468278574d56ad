"""Tree structure: major vertices, terminal degrees, path cover, closed forms.

Vocabulary: a major vertex has degree >= 3; a leaf is a terminal vertex of
the major vertex it is strictly closest to (equidistant leaves belong to
none). A degree-2 vertex is exterior when it lies on a shortest path from a
terminal vertex to its major vertex, interior otherwise. P(T) is the minimum
number of vertex-disjoint paths covering V(T), computed here by a
maximum-linear-forest dynamic program that is independent of the zero
forcing solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .graph_core import Graph, GraphError, GraphKind, classify, leaves


@dataclass(frozen=True)
class TreeProfile:
    leaves: tuple[int, ...]
    major_vertices: tuple[int, ...]
    terminal_degree: dict[int, int]
    exterior_major: tuple[int, ...]
    interior_deg2: tuple[int, ...]
    exterior_deg2: tuple[int, ...]
    major_count: int


@dataclass(frozen=True)
class PathCover:
    paths: tuple[tuple[int, ...], ...]
    count: int


def _require_tree(t: Graph, min_n: int = 1) -> None:
    if t.n < min_n:
        raise GraphError(f"operation requires a tree on >= {min_n} vertices")
    if t.n == 0 or classify(t).kind is not GraphKind.TREE:
        raise GraphError("operation requires a tree")


def _bfs_distances(t: Graph, s: int) -> list[int]:
    dist = [-1] * t.n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        m = t.adj[u]
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def _tree_path(t: Graph, a: int, b: int) -> list[int]:
    """Vertices of the unique a-b path in a tree, endpoints included."""
    parent = {a: -1}
    q = deque([a])
    while q:
        u = q.popleft()
        if u == b:
            break
        m = t.adj[u]
        while m:
            bit = m & -m
            m ^= bit
            v = bit.bit_length() - 1
            if v not in parent:
                parent[v] = u
                q.append(v)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def tree_profile(t: Graph) -> TreeProfile:
    """Classify leaves, majors, terminal degrees, and degree-2 vertices."""
    _require_tree(t, min_n=2)
    lvs = leaves(t)
    majors = tuple(v for v in range(t.n) if t.degree(v) >= 3)
    ter: dict[int, int] = {v: 0 for v in majors}
    exterior_deg2: set[int] = set()
    if majors:
        for u in lvs:
            dist = _bfs_distances(t, u)
            dmin = min(dist[v] for v in majors)
            nearest = [v for v in majors if dist[v] == dmin]
            if len(nearest) > 1:
                continue  # equidistant from two majors: terminal vertex of neither
            ter[nearest[0]] += 1
            exterior_deg2.update(_tree_path(t, u, nearest[0])[1:-1])
    deg2 = [v for v in range(t.n) if t.degree(v) == 2]
    interior = tuple(v for v in deg2 if v not in exterior_deg2)
    exterior = tuple(v for v in deg2 if v in exterior_deg2)
    return TreeProfile(
        leaves=lvs,
        major_vertices=majors,
        terminal_degree=ter,
        exterior_major=tuple(v for v in majors if ter[v] > 0),
        interior_deg2=interior,
        exterior_deg2=exterior,
        major_count=len(majors),
    )


def path_cover_number(t: Graph) -> PathCover:
    """Exact P(T) with a witness partition into induced paths.

    P(T) = n minus the maximum number of edges in a spanning linear forest
    (every vertex keeps at most two incident chosen edges); in a tree any
    acyclic degree-<=2 edge subset is a disjoint union of paths.
    """
    _require_tree(t)
    n = t.n
    if n == 1:
        return PathCover(((0,),), 1)

    # dp[v] = (best_free, best_used): max chosen edges in v's subtree when the
    # parent edge is not / is chosen. keep[v][used] lists the chosen child edges.
    order = []
    parent = [-1] * n
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        order.append(u)
        m = t.adj[u]
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if not (seen >> v & 1):
                seen |= 1 << v
                parent[v] = u
                stack.append(v)
    best = [[0, 0] for _ in range(n)]
    keep: list[list[tuple[int, ...]]] = [[(), ()] for _ in range(n)]
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    for v in reversed(order):
        base = 0
        gains = []
        for c in children[v]:
            base += best[c][0]
            delta = best[c][1] + 1 - best[c][0]
            if delta > 0:
                gains.append((delta, c))
        gains.sort(key=lambda g: (-g[0], g[1]))
        for used in (0, 1):
            chosen = gains[: 2 - used]
            best[v][used] = base + sum(d for d, _ in chosen)
            keep[v][used] = tuple(c for _, c in chosen)

    chosen_edges: set[tuple[int, int]] = set()
    stack2 = [(0, 0)]
    while stack2:
        v, used = stack2.pop()
        kept = set(keep[v][used])
        for c in children[v]:
            if c in kept:
                chosen_edges.add((min(v, c), max(v, c)))
                stack2.append((c, 1))
            else:
                stack2.append((c, 0))

    # walk the linear forest into explicit paths
    fadj: list[list[int]] = [[] for _ in range(n)]
    for u, v in chosen_edges:
        fadj[u].append(v)
        fadj[v].append(u)
    visited = [False] * n
    paths = []
    for v in range(n):
        if visited[v] or len(fadj[v]) > 1:
            continue
        seq = [v]
        visited[v] = True
        prev = -1
        cur = v
        while True:
            nxt = [w for w in fadj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            visited[cur] = True
            seq.append(cur)
        if seq[0] > seq[-1]:
            seq.reverse()
        paths.append(tuple(seq))
    paths.sort()
    count = n - len(chosen_edges)
    assert count == len(paths)
    return PathCover(tuple(paths), count)


def sdim_tree_closed_form(t: Graph) -> int:
    """sigma(T) - 1, the strong metric dimension of any tree on >= 2 vertices."""
    _require_tree(t, min_n=2)
    return len(leaves(t)) - 1


def z_equals_sdim_characterization(t: Graph) -> bool:
    """True iff every path between two major vertices has an interior degree-2 vertex.

    Vacuously true when the tree has at most one major vertex.
    """
    _require_tree(t)
    if t.n < 2:
        return True
    profile = tree_profile(t)
    majors = profile.major_vertices
    if len(majors) <= 1:
        return True
    interior = set(profile.interior_deg2)
    for i, a in enumerate(majors):
        for b in majors[i + 1:]:
            if not any(v in interior for v in _tree_path(t, a, b)):
                return False
    return True


def dim_equals_z_characterization(t: Graph) -> bool:
    """True iff the tree has no interior degree-2 vertex and every major vertex
    has terminal degree >= 2. Rejects trees without a major vertex."""
    _require_tree(t, min_n=2)
    profile = tree_profile(t)
    if not profile.major_vertices:
        raise GraphError("characterization requires a tree with at least one major vertex")
    if profile.interior_deg2:
        return False
    return all(profile.terminal_degree[v] >= 2 for v in profile.major_vertices)
