"""Exact isomorphism certificates for trees and unicyclic graphs.

The scan harness enumerates labeled graphs but the invariants it checks are
label-independent, so computed values are memoized under a certificate that
is equal for two graphs iff they are isomorphic: the classic
sorted-subtree code rooted at the tree center(s), and for unicyclic graphs
the rotation/reflection-minimal tuple of hanging-forest codes around the
cycle.
"""

from __future__ import annotations

from typing import Optional

from .graph_core import Graph

Code = tuple


def _rooted_code(adj: tuple[int, ...], v: int, parent: int, banned: int) -> Code:
    """Sorted-subtree code of v's subtree, never crossing `banned` vertices."""
    subs = []
    m = adj[v] & ~banned
    while m:
        b = m & -m
        m ^= b
        u = b.bit_length() - 1
        if u != parent:
            subs.append(_rooted_code(adj, u, v, banned))
    subs.sort()
    return tuple(subs)


def _centers(adj: tuple[int, ...], n: int) -> list[int]:
    """The 1 or 2 middle vertices of a tree, by repeated leaf stripping."""
    if n <= 2:
        return list(range(n))
    deg = [m.bit_count() for m in adj]
    remaining = n
    layer = [v for v in range(n) if deg[v] == 1]
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
        for v in layer:
            m = adj[v]
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return [v for v in range(n) if deg[v] > 0]


def tree_certificate(g: Graph) -> Code:
    """Certificate equal across exactly the isomorphic labeled trees."""
    if g.n == 1:
        return ("T", 1, ())
    centers = _centers(g.adj, g.n)
    if len(centers) == 1:
        return ("T", 1, _rooted_code(g.adj, centers[0], -1, 0))
    a, b = centers
    ca = _rooted_code(g.adj, a, b, 0)
    cb = _rooted_code(g.adj, b, a, 0)
    return ("T", 2, min((ca, cb), (cb, ca)))


def _two_core_mask(adj: tuple[int, ...], n: int) -> int:
    core = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        m = core
        while m:
            b = m & -m
            m ^= b
            if (adj[b.bit_length() - 1] & core).bit_count() <= 1:
                core ^= b
                changed = True
    return core


def unicyclic_certificate(g: Graph) -> Code:
    """Certificate equal across exactly the isomorphic connected unicyclic graphs."""
    adj = g.adj
    core = _two_core_mask(adj, g.n)
    start = (core & -core).bit_length() - 1
    # cycle in one traversal order; all rotations/reflections are minimized below
    order = [start]
    prev = -1
    cur = start
    while True:
        m = adj[cur] & core
        nxt = -1
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if w != prev:
                nxt = w
                break
        if nxt == start or nxt < 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    hang = [_rooted_code(adj, v, -1, core & ~(1 << v)) for v in order]
    c = len(hang)
    best = None
    for seq in (hang, hang[::-1]):
        for i in range(c):
            cand = tuple(seq[i:] + seq[:i])
            if best is None or cand < best:
                best = cand
    return ("U", c, best)


def certificate(g: Graph) -> Optional[Code]:
    """Exact certificate for connected trees/unicyclic graphs, else None."""
    if g.n == 0 or not g.is_connected():
        return None
    rank = g.edge_count() - g.n + 1
    if rank == 0:
        return tree_certificate(g)
    if rank == 1:
        return unicyclic_certificate(g)
    return None
