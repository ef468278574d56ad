"""Color-change process, zero-forcing-set verification, and exact Z(G).

The color-change rule: a black vertex with exactly one white neighbor turns
that neighbor black. Z(G) is the minimum size of an initial black set whose
closure under the rule is all of V(G). The solver is an exhaustive subset
search ascending by cardinality, so minimality is guaranteed by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Iterable

from .graph_core import Graph, GraphError, bits, connected_components


@dataclass(frozen=True)
class ForcingChronicle:
    """One deterministic run of the color-change rule to closure."""

    initial_black: tuple[int, ...]
    forces: tuple[tuple[int, int], ...]
    final_black: tuple[int, ...]


@dataclass(frozen=True)
class ZResult:
    value: int
    witness: tuple[int, ...]


def closure_mask(adj: tuple[int, ...], n: int, black: int) -> int:
    """Final black bitmask; order-independent, any application order."""
    full = (1 << n) - 1
    while black != full:
        progressed = False
        m = black
        while m:
            b = m & -m
            m ^= b
            w = adj[b.bit_length() - 1] & ~black
            if w and not (w & (w - 1)):
                black |= w
                progressed = True
        if not progressed:
            break
    return black


def forcing_closure(g: Graph, s: Iterable[int]) -> ForcingChronicle:
    """Apply the color-change rule to a fixed point.

    Deterministic force order: scan black vertices in ascending id, apply the
    first available force, then rescan. The final set does not depend on the
    order, only the chronicle does.
    """
    initial = 0
    for v in s:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        initial |= 1 << v
    black = initial
    forces = []
    full = (1 << g.n) - 1
    while black != full:
        m = black
        forced = None
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            w = g.adj[u] & ~black
            if w and not (w & (w - 1)):
                forced = (u, w.bit_length() - 1)
                break
        if forced is None:
            break
        forces.append(forced)
        black |= 1 << forced[1]
    return ForcingChronicle(bits(initial), tuple(forces), bits(black))


def is_zero_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff the closure of s blackens every vertex."""
    mask = 0
    for v in s:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return closure_mask(g.adj, g.n, mask) == (1 << g.n) - 1


def _component_z(g: Graph) -> ZResult:
    """Exact Z of a connected graph by cardinality-ascending subset search."""
    n = g.n
    if n == 1:
        return ZResult(1, (0,))
    adj = g.adj
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            black = 0
            for v in combo:
                black |= 1 << v
            if closure_mask(adj, n, black) == full:
                return ZResult(k, combo)
    raise AssertionError("unreachable: V(G) always forces itself")


def zero_forcing_number(g: Graph) -> ZResult:
    """Exact Z(G); additive over components, with the canonical witness.

    The witness is the lexicographically first minimum set within each
    component (union over components when disconnected).
    """
    if g.n == 0:
        return ZResult(0, ())
    if g.is_connected():
        return _component_z(g)
    total = 0
    witness: list[int] = []
    for comp, ids in connected_components(g):
        res = _component_z(comp)
        total += res.value
        witness.extend(ids[v] for v in res.witness)
    return ZResult(total, tuple(sorted(witness)))


def partial_sun_Z(n: int, segments: Iterable[int]) -> int:
    """Closed-form Z of a partial n-sun given its segment sizes.

    Value is max(2, sum of ceil(|U_i|/2)). Feasibility: t >= 2 segments need a
    gap between consecutive ones, so sum + t <= n; a single segment may fill
    the whole cycle.
    """
    sizes = list(segments)
    if n < 3:
        raise GraphError(f"cycle length must be >= 3, got {n}")
    if any(s < 1 for s in sizes):
        raise GraphError("segment sizes must be >= 1")
    t = len(sizes)
    if t == 1 and sizes[0] > n:
        raise GraphError(f"segment of size {sizes[0]} does not fit on C_{n}")
    if t >= 2 and sum(sizes) + t > n:
        raise GraphError(f"segments {sizes} do not fit on C_{n} with separating gaps")
    return max(2, sum(ceil(s / 2) for s in sizes))


def z_cut_vertex_lower_bound(g: Graph, v: int) -> int:
    """Lower bound for Z(G) at a cut vertex: sum of Z over the pieces, minus k-1.

    Each piece is the subgraph induced by one component of G-v together with v.
    """
    if not g.is_connected():
        raise GraphError("cut-vertex bound requires a connected graph")
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    rest, rest_ids = g.induced([u for u in range(g.n) if u != v])
    comps = connected_components(rest)
    if len(comps) < 2:
        raise GraphError(f"vertex {v} is not a cut vertex")
    total = 0
    for _comp, ids in comps:
        piece, _ = g.induced([rest_ids[i] for i in ids] + [v])
        total += zero_forcing_number(piece).value
    return total - len(comps) + 1
