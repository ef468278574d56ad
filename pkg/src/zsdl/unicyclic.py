"""Unique-cycle extraction, the trimming calculus, and partial-sun detection.

Trimming deletes, repeatedly and in a fixed priority order, peripheral
leaves (leaf whose neighbor has degree exactly 2), isolated path components
(any order, including single vertices), and appropriate vertices (vertices
whose removal leaves at least two path components). With the cycle protected,
a connected unicyclic graph trims down to a generalized partial n-sun plus
whatever path components are still being consumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .graph_core import (
    Graph,
    GraphError,
    GraphKind,
    bits,
    classify,
)
from .strong_resolving import strong_metric_dimension
from .zero_forcing import zero_forcing_number


class StepKind(Enum):
    APPROPRIATE_VERTEX = "appropriate-vertex"
    ISOLATED_PATH = "isolated-path"
    PERIPHERAL_LEAF = "peripheral-leaf"


@dataclass(frozen=True)
class TrimStep:
    kind: StepKind
    target: int | tuple[int, ...]

    def removed_vertices(self) -> tuple[int, ...]:
        if isinstance(self.target, tuple):
            return self.target
        return (self.target,)


@dataclass(frozen=True)
class TrimTrace:
    steps: tuple[TrimStep, ...]
    result: Graph
    result_ids: tuple[int, ...]


@dataclass(frozen=True)
class SunDescription:
    cycle_length: int
    cycle: tuple[int, ...]
    leaf_counts: tuple[int, ...]
    segments: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TrimDeltas:
    kind: StepKind
    target: int | tuple[int, ...]
    target_on_cycle: bool
    z_before: int
    z_after: int
    sdim_before: int
    sdim_after: int

    @property
    def delta_z(self) -> int:
        return self.z_after - self.z_before

    @property
    def delta_sdim(self) -> int:
        return self.sdim_after - self.sdim_before


def _alive_degree(adj: tuple[int, ...], alive: int, v: int) -> int:
    return (adj[v] & alive).bit_count()


def _two_core(adj: tuple[int, ...], alive: int) -> int:
    """Strip degree-<=1 vertices repeatedly; for a unicyclic graph this is the cycle."""
    core = alive
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


def _cycle_order(adj: tuple[int, ...], core: int) -> tuple[int, ...]:
    """Cycle vertices in traversal order: smallest id first, smaller second."""
    start = (core & -core).bit_length() - 1
    nbrs = sorted(bits(adj[start] & core))
    order = [start, nbrs[0]]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = [w for w in bits(adj[cur] & core) if w != prev]
        if nxt[0] == start:
            break
        order.append(nxt[0])
    return tuple(order)


def unique_cycle(g: Graph) -> tuple[int, ...]:
    """The unique cycle of a unicyclic graph, canonical rotation and direction."""
    if classify(g).kind is not GraphKind.UNICYCLIC:
        raise GraphError("unique_cycle requires a unicyclic graph")
    core = _two_core(g.adj, (1 << g.n) - 1)
    return _cycle_order(g.adj, core)


def _components_of(adj: tuple[int, ...], alive: int) -> list[int]:
    comps = []
    remaining = alive
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            nxt &= alive
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def _is_path_component(adj: tuple[int, ...], comp: int) -> bool:
    """A connected component is a path iff |E| = |V|-1 and max degree <= 2."""
    edges2 = 0
    m = comp
    while m:
        b = m & -m
        m ^= b
        d = (adj[b.bit_length() - 1] & comp).bit_count()
        if d > 2:
            return False
        edges2 += d
    return edges2 == 2 * (comp.bit_count() - 1)


def _path_component_order(adj: tuple[int, ...], comp: int) -> tuple[int, ...]:
    """Path component vertices endpoint-to-endpoint, smaller endpoint first."""
    vs = bits(comp)
    if len(vs) == 1:
        return vs
    ends = [v for v in vs if (adj[v] & comp).bit_count() == 1]
    start = min(ends)
    order = [start]
    prev = -1
    cur = start
    while len(order) < len(vs):
        nxt = [w for w in bits(adj[cur] & comp) if w != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return tuple(order)


def _next_step(adj: tuple[int, ...], alive: int, protect_cycle: bool) -> Optional[TrimStep]:
    core = _two_core(adj, alive) if protect_cycle else 0
    # 1. peripheral leaf, smallest id
    m = alive
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        nb = adj[v] & alive
        if nb.bit_count() == 1 and (adj[nb.bit_length() - 1] & alive).bit_count() == 2:
            if not (core >> v & 1):
                return TrimStep(StepKind.PERIPHERAL_LEAF, v)
    # 2. isolated path component, smallest contained id
    comps = _components_of(adj, alive)
    for comp in comps:  # components come back ordered by smallest id
        if _is_path_component(adj, comp):
            return TrimStep(StepKind.ISOLATED_PATH, _path_component_order(adj, comp))
    # 3. appropriate vertex, smallest id
    m = alive
    while m:
        b = m & -m
        m ^= b
        v = b.bit_length() - 1
        if protect_cycle and core >> v & 1:
            continue
        if _count_path_components(adj, alive & ~b) >= 2:
            return TrimStep(StepKind.APPROPRIATE_VERTEX, v)
    return None


def _count_path_components(adj: tuple[int, ...], alive: int, stop_at: int = 2) -> int:
    count = 0
    for comp in _components_of(adj, alive):
        if _is_path_component(adj, comp):
            count += 1
            if count >= stop_at:
                break
    return count


def next_trim_step(g: Graph, protect_cycle: bool = False) -> Optional[TrimStep]:
    """First available trim step under the fixed priority, or None if irreducible.

    Priority: peripheral leaf, then isolated path, then appropriate vertex,
    smallest target id first. With protect_cycle, vertices on the current
    cycle are never selected.
    """
    if g.n == 0:
        return None
    return _next_step(g.adj, (1 << g.n) - 1, protect_cycle)


def _apply_step(alive: int, step: TrimStep) -> int:
    for v in step.removed_vertices():
        alive &= ~(1 << v)
    return alive


def trimmed_form(g: Graph, protect_cycle: bool = False) -> TrimTrace:
    """Trim a connected unicyclic graph to its fixed point.

    Step targets are ids in the input graph's labeling, so the trace replays
    on the input. The result is the induced subgraph on the surviving
    vertices, relabeled dense, with the original ids alongside.
    """
    if classify(g).kind is not GraphKind.UNICYCLIC:
        raise GraphError("trimmed_form requires a unicyclic graph")
    alive = (1 << g.n) - 1
    steps = []
    while True:
        step = _next_step(g.adj, alive, protect_cycle)
        if step is None:
            break
        steps.append(step)
        alive = _apply_step(alive, step)
    result, ids = g.induced(bits(alive))
    return TrimTrace(tuple(steps), result, ids)


def detect_generalized_partial_sun(g: Graph) -> Optional[SunDescription]:
    """Recognize a cycle with pendant leaves (any number per cycle vertex).

    Returns None unless g is connected, unicyclic, and every non-cycle vertex
    is a leaf hanging off the cycle. A bare cycle qualifies with all counts 0.
    """
    if g.n < 3 or not g.is_connected():
        return None
    if g.edge_count() != g.n:
        return None
    cycle = unique_cycle(g)
    on_cycle = 0
    for v in cycle:
        on_cycle |= 1 << v
    counts = [0] * len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for v in range(g.n):
        if on_cycle >> v & 1:
            continue
        if g.degree(v) != 1:
            return None
        nbr = g.adj[v].bit_length() - 1
        if not (on_cycle >> nbr & 1):
            return None
        counts[pos[nbr]] += 1
    return SunDescription(
        cycle_length=len(cycle),
        cycle=cycle,
        leaf_counts=tuple(counts),
        segments=_circular_segments(counts),
    )


def _circular_segments(counts: list[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal circular runs of positions with count >= 1."""
    c = len(counts)
    if all(counts):
        return (tuple(range(c)),)
    if not any(counts):
        return ()
    anchor = next(i for i in range(c) if counts[i] == 0)
    segments = []
    run: list[int] = []
    for off in range(1, c + 1):
        i = (anchor + off) % c
        if counts[i]:
            run.append(i)
        elif run:
            segments.append(tuple(run))
            run = []
    if run:
        segments.append(tuple(run))
    return tuple(sorted(segments))


def _validate_step(g: Graph, step: TrimStep) -> None:
    alive = (1 << g.n) - 1
    if step.kind is StepKind.PERIPHERAL_LEAF:
        v = step.target
        if not isinstance(v, int) or not (0 <= v < g.n) or g.degree(v) != 1:
            raise GraphError(f"invalid peripheral leaf {v!r}")
        if g.degree(g.adj[v].bit_length() - 1) != 2:
            raise GraphError(f"vertex {v} is a leaf but not peripheral")
    elif step.kind is StepKind.ISOLATED_PATH:
        target = step.target
        if not isinstance(target, tuple) or not target:
            raise GraphError("isolated-path step needs a vertex tuple")
        comp = next(
            (c for c in _components_of(g.adj, alive) if c >> target[0] & 1), 0
        )
        if set(bits(comp)) != set(target) or not _is_path_component(g.adj, comp):
            raise GraphError(f"{target!r} is not an isolated path component")
    elif step.kind is StepKind.APPROPRIATE_VERTEX:
        v = step.target
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise GraphError(f"invalid appropriate vertex {v!r}")
        if _count_path_components(g.adj, alive & ~(1 << v)) < 2:
            raise GraphError(f"vertex {v} is not an appropriate vertex")
    else:  # pragma: no cover
        raise GraphError(f"unknown step kind {step.kind!r}")


def trim_invariant_check(g: Graph, step: TrimStep) -> TrimDeltas:
    """Z and sdim before/after one trim step (component-additive on unions)."""
    _validate_step(g, step)
    core = _two_core(g.adj, (1 << g.n) - 1)
    on_cycle = (
        step.kind is StepKind.APPROPRIATE_VERTEX and bool(core >> step.target & 1)
    )
    z_before = zero_forcing_number(g).value
    sdim_before = strong_metric_dimension(g).value
    alive = _apply_step((1 << g.n) - 1, step)
    after, _ = g.induced(bits(alive))
    return TrimDeltas(
        kind=step.kind,
        target=step.target,
        target_on_cycle=on_cycle,
        z_before=z_before,
        z_after=zero_forcing_number(after).value,
        sdim_before=sdim_before,
        sdim_after=strong_metric_dimension(after).value,
    )
