"""Geodesic resolving predicates, MMD machinery, and exact sdim(G) / dim(G).

A vertex x strongly resolves a pair (u, v) when one of them lies on a
geodesic from x to the other. sdim(G) is the minimum size of a set that
strongly resolves every pair; dim(G) is the classic metric dimension
(distance vectors to the set distinguish all vertices). Both solvers are
subset searches; the sdim search starts at the larger of two proven lower
bounds (leaf count minus one, and the minimum vertex cover of the graph on
mutually-maximally-distant pairs), so the first hit is already minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph_core import (
    DistanceMatrix,
    Graph,
    GraphError,
    all_pairs_distances,
    connected_components,
    leaves,
)


@dataclass(frozen=True)
class MmdGraph:
    """Unordered pairs {x, y} with x and y mutually maximally distant."""

    n: int
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SdimResult:
    value: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class DimResult:
    value: int
    witness: tuple[int, ...]


def strongly_resolves(x: int, u: int, v: int, dm: DistanceMatrix) -> bool:
    """True iff u lies on an x-v geodesic or v lies on an x-u geodesic."""
    if u == v:
        raise GraphError("strongly_resolves needs a pair of distinct vertices")
    duv = dm.rows[u][v]
    dxu = dm.rows[x][u]
    dxv = dm.rows[x][v]
    return dxu + duv == dxv or dxv + duv == dxu


def _pair_resolver_masks(dm: DistanceMatrix) -> list[int]:
    """For each vertex pair, the bitmask of vertices that strongly resolve it.

    Masks come back sorted by popcount so that a subset check can fail fast on
    the hardest pairs first.
    """
    n = dm.n
    rows = dm.rows
    masks = []
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            rv = rows[v]
            duv = ru[v]
            m = 0
            for x in range(n):
                dxu = ru[x]
                dxv = rv[x]
                if dxu + duv == dxv or dxv + duv == dxu:
                    m |= 1 << x
            masks.append(m)
    masks.sort(key=int.bit_count)
    return masks


def is_strong_resolving_set(g: Graph, w: Iterable[int]) -> bool:
    """True iff every pair of distinct vertices is strongly resolved by some x in w."""
    if not g.is_connected():
        raise GraphError("strong resolving sets are defined on connected graphs")
    mask = 0
    for v in w:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    dm = all_pairs_distances(g)
    return all(mask & m for m in _pair_resolver_masks(dm))


def mmd_graph(g: Graph) -> MmdGraph:
    """All mutually-maximally-distant pairs, from the distance matrix.

    x is maximally distant from y when no neighbor of x is farther from y.
    """
    if not g.is_connected():
        raise GraphError("MMD pairs are defined on connected graphs")
    dm = all_pairs_distances(g)
    rows = dm.rows
    n = g.n

    def max_distant(x: int, y: int) -> bool:
        dxy = rows[x][y]
        m = g.adj[x]
        while m:
            b = m & -m
            m ^= b
            if rows[b.bit_length() - 1][y] > dxy:
                return False
        return True

    pairs = tuple(
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if max_distant(x, y) and max_distant(y, x)
    )
    return MmdGraph(n, pairs)


def mmd_vertex_cover_lower_bound(m: MmdGraph) -> int:
    """Exact minimum vertex cover of the MMD pair graph.

    Any strong resolving set must contain an endpoint of every MMD pair, so
    this is a valid lower bound for sdim.
    """
    adj = [0] * m.n
    for x, y in m.pairs:
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    alive = (1 << m.n) - 1

    def cover(alive: int) -> int:
        # branch on a max-degree endpoint: either it is in the cover, or all
        # of its neighbors are
        best_v = -1
        best_deg = 0
        a = alive
        while a:
            b = a & -a
            a ^= b
            v = b.bit_length() - 1
            deg = (adj[v] & alive).bit_count()
            if deg > best_deg:
                best_deg = deg
                best_v = v
        if best_deg == 0:
            return 0
        nbrs = adj[best_v] & alive
        take_v = 1 + cover(alive & ~(1 << best_v))
        if best_deg >= take_v:
            return take_v
        take_nbrs = best_deg + cover(alive & ~nbrs & ~(1 << best_v))
        return min(take_v, take_nbrs)

    return cover(alive)


def _component_sdim(g: Graph) -> SdimResult:
    """Exact sdim of a connected graph, search seeded at the proven lower bounds."""
    n = g.n
    if n <= 1:
        return SdimResult(0, ())
    dm = all_pairs_distances(g)
    masks = _pair_resolver_masks(dm)
    lo = max(1, len(leaves(g)) - 1, mmd_vertex_cover_lower_bound(mmd_graph(g)))
    for k in range(lo, n + 1):
        for combo in combinations(range(n), k):
            w = 0
            for v in combo:
                w |= 1 << v
            for m in masks:
                if not w & m:
                    break
            else:
                return SdimResult(k, combo)
    raise AssertionError("unreachable: V(G) strongly resolves G")


def strong_metric_dimension(g: Graph) -> SdimResult:
    """Exact sdim(G); additive over components, canonical witness."""
    if g.n == 0:
        return SdimResult(0, ())
    if g.is_connected():
        return _component_sdim(g)
    total = 0
    witness: list[int] = []
    for comp, ids in connected_components(g):
        res = _component_sdim(comp)
        total += res.value
        witness.extend(ids[v] for v in res.witness)
    return SdimResult(total, tuple(sorted(witness)))


def metric_dimension(g: Graph) -> DimResult:
    """Exact dim(G) of a connected graph by subset search on metric representations."""
    if not g.is_connected():
        raise GraphError("metric dimension is defined on connected graphs")
    n = g.n
    if n <= 1:
        return DimResult(0, ())
    rows = all_pairs_distances(g).rows
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            seen = set()
            ok = True
            for v in range(n):
                rep = tuple(rows[v][w] for w in combo)
                if rep in seen:
                    ok = False
                    break
                seen.add(rep)
            if ok:
                return DimResult(k, combo)
    raise AssertionError("unreachable: V(G) resolves G")
