"""Deterministic constructors and exhaustive enumerators for graph families.

Every family is addressable by a spec string like ``comb:k=5``,
``sun:n=6,u=1,1,0,1,0,0``, ``grid:s=3`` or ``prufer-trees:n=2..9``. Ranged
families expose a raw index space (``raw_size`` / ``item_at``) so the scan
harness can shard work across processes; positions that fall on filtered-out
members (e.g. disconnected bitmask graphs) yield None.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, NamedTuple, Optional

from .graph_core import Graph, GraphError

TREE_MIN_N, TREE_MAX_N = 2, 9
TREE_PLUS_E_MIN_N, TREE_PLUS_E_MAX_N = 3, 8
CONNECTED_MIN_N, CONNECTED_MAX_N = 2, 7
LONG_SCAN_ENV = "ZSDL_LONG"


class TreePlusE(NamedTuple):
    tree: Graph
    edge: tuple[int, int]
    graph: Graph


class SunItem(NamedTuple):
    graph: Graph
    cycle_length: int
    leaf_counts: tuple[int, ...]


Item = Graph | TreePlusE | SunItem


def item_graph(item: Item) -> Graph:
    """The graph under scrutiny for any family item."""
    return item if isinstance(item, Graph) else item.graph


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict[str, object] = field(default_factory=dict)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        parts = []
        for k, v in self.params.items():
            if isinstance(v, tuple):
                parts.append(f"{k}={v[0]}..{v[1]}")
            elif isinstance(v, list):
                parts.append(f"{k}={','.join(str(x) for x in v)}")
            else:
                parts.append(f"{k}={v}")
        return f"{self.family}:{','.join(parts)}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``name:key=value,...``; values are ints, ranges a..b, or int lists."""
    name, _, rest = text.strip().partition(":")
    if not name:
        raise GraphError(f"empty family name in {text!r}")
    raw: dict[str, str] = {}
    last = None
    if rest:
        for tok in rest.split(","):
            if "=" in tok:
                k, _, v = tok.partition("=")
                raw[k.strip()] = v.strip()
                last = k.strip()
            elif last is not None:
                raw[last] += "," + tok.strip()  # continuation of a list value
            else:
                raise GraphError(f"malformed family parameters in {text!r}")
    params: dict[str, object] = {}
    for k, v in raw.items():
        if "," in v:
            params[k] = [int(x) for x in v.split(",")]
        elif ".." in v:
            a, _, b = v.partition("..")
            params[k] = (int(a), int(b))
        else:
            params[k] = int(v)
    return FamilySpec(name, params)


def _int_param(spec: FamilySpec, key: str) -> int:
    v = spec.params.get(key)
    if not isinstance(v, int):
        raise GraphError(f"family {spec.family!r} needs integer parameter {key}")
    return v


def _values(spec: FamilySpec, key: str) -> list[int]:
    """An int or a..b range parameter, as the list of values to iterate."""
    v = spec.params.get(key)
    if isinstance(v, int):
        return [v]
    if isinstance(v, tuple):
        a, b = v
        if a > b:
            raise GraphError(f"empty range {a}..{b} for {key}")
        return list(range(a, b + 1))
    raise GraphError(f"family {spec.family!r} needs parameter {key} (int or a..b)")


# ---------------------------------------------------------------------------
# constructors


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError("complete bipartite graph needs s, t >= 1")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def comb_graph(k: int) -> Graph:
    """Spine 0..k+1 with a tooth leaf on each of the k interior spine vertices.

    Tooth on spine vertex i is vertex k+1+i, so teeth are k+2..2k+1 and the
    tree has k+2 leaves (both spine ends plus the teeth).
    """
    if k < 1:
        raise GraphError("comb needs k >= 1")
    edges = [(i, i + 1) for i in range(k + 1)]
    edges += [(i, k + 1 + i) for i in range(1, k + 1)]
    return Graph.from_edges(2 * k + 2, edges)


def comb_plus_e_graph(k: int) -> Graph:
    """The comb with the extra edge joining the two spine-end leaves."""
    return comb_graph(k).add_edge(0, k + 1)


def sun_graph(n: int, counts: list[int]) -> Graph:
    """C_n with counts[i] pendant leaves attached to cycle vertex i."""
    if n < 3:
        raise GraphError("sun needs cycle length n >= 3")
    if len(counts) != n or any(c < 0 for c in counts):
        raise GraphError(f"sun needs {n} non-negative leaf counts")
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for i, c in enumerate(counts):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def sun_from_segments(n: int, sizes: list[int]) -> Graph:
    """Partial n-sun realizing the given segment sizes.

    Segments are placed from position 0 with a single empty position between
    consecutive segments, which makes each one a maximal run.
    """
    if n < 3:
        raise GraphError("sun needs cycle length n >= 3")
    if any(s < 1 for s in sizes):
        raise GraphError("segment sizes must be >= 1")
    t = len(sizes)
    if (t == 1 and sizes[0] > n) or (t >= 2 and sum(sizes) + t > n):
        raise GraphError(f"segments {sizes} do not fit on C_{n}")
    counts = [0] * n
    pos = 0
    for s in sizes:
        for _ in range(s):
            counts[pos] = 1
            pos += 1
        pos += 1  # separating gap
    return sun_graph(n, counts)


def alternating_sun_graph(k: int) -> Graph:
    """C_{2k} with one pendant leaf on every other cycle vertex."""
    if k < 2:
        raise GraphError("alternating sun needs k >= 2")
    return sun_graph(2 * k, [1 if i % 2 == 0 else 0 for i in range(2 * k)])


def grid_graph(s: int) -> Graph:
    """The Cartesian product of a path on s vertices with itself."""
    if s < 1:
        raise GraphError("grid needs s >= 1")
    edges = []
    for i in range(s):
        for j in range(s):
            if j + 1 < s:
                edges.append((i * s + j, i * s + j + 1))
            if i + 1 < s:
                edges.append((i * s + j, (i + 1) * s + j))
    return Graph.from_edges(s * s, edges)


# ---------------------------------------------------------------------------
# enumerators


def _prufer_adj(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Decode a Prufer sequence over 0..n-1 into adjacency bitmasks."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    adj = [0] * n
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        adj[leaf] |= 1 << x
        adj[x] |= 1 << leaf
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    adj[leaf] |= 1 << (n - 1)
    adj[n - 1] |= 1 << leaf
    return tuple(adj)


def _index_to_prufer(idx: int, n: int) -> tuple[int, ...]:
    """The idx-th Prufer sequence in lexicographic order (base-n digits)."""
    seq = [0] * (n - 2)
    for i in range(n - 3, -1, -1):
        idx, seq[i] = divmod(idx, n)
    return tuple(seq)


def tree_from_prufer_index(idx: int, n: int) -> Graph:
    return Graph(n, _prufer_adj(_index_to_prufer(idx, n), n))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees on 0..n-1, in lexicographic Prufer order."""
    if not TREE_MIN_N <= n <= TREE_MAX_N:
        raise GraphError(f"tree enumeration supports {TREE_MIN_N} <= n <= {TREE_MAX_N}")
    for idx in range(n ** (n - 2)):
        yield tree_from_prufer_index(idx, n)


def nonedges(g: Graph) -> list[tuple[int, int]]:
    """Non-adjacent vertex pairs (u, v) with u < v, lexicographically."""
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not (g.adj[u] >> v & 1)
    ]


def enumerate_tree_plus_e(n: int) -> Iterator[TreePlusE]:
    """Every labeled tree on n vertices with every non-edge attached."""
    if not TREE_PLUS_E_MIN_N <= n <= TREE_PLUS_E_MAX_N:
        raise GraphError(
            f"tree-plus-e enumeration supports {TREE_PLUS_E_MIN_N} <= n <= {TREE_PLUS_E_MAX_N}"
        )
    for tree in enumerate_trees(n):
        for e in nonedges(tree):
            yield TreePlusE(tree, e, tree.add_edge(*e))


def _check_connected_range(n: int) -> None:
    if not CONNECTED_MIN_N <= n <= CONNECTED_MAX_N:
        raise GraphError(
            f"labeled-connected enumeration supports {CONNECTED_MIN_N} <= n <= {CONNECTED_MAX_N}"
        )
    if n == CONNECTED_MAX_N and os.environ.get(LONG_SCAN_ENV) != "1":
        raise GraphError(
            f"labeled-connected n={CONNECTED_MAX_N} is a long scan; set {LONG_SCAN_ENV}=1 to enable"
        )


def graph_from_edge_mask(mask: int, n: int, pairs: list[tuple[int, int]]) -> Graph:
    adj = [0] * n
    m = mask
    while m:
        b = m & -m
        m ^= b
        u, v = pairs[b.bit_length() - 1]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_labeled_connected(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on 0..n-1, in edge-bitmask order.

    Bit i of the mask is the i-th pair in lexicographic order; no isomorphism
    deduplication is done.
    """
    _check_connected_range(n)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = graph_from_edge_mask(mask, n, pairs)
        if g.is_connected():
            yield g


# ---------------------------------------------------------------------------
# family streams (raw index space for sharding)


class Family:
    """A family of items with a shardable raw index space."""

    def __init__(self, spec: FamilySpec, blocks: list[tuple[int, int]]):
        # blocks: (parameter value, raw block size)
        self.spec = spec
        self.blocks = blocks
        self.raw_size = sum(size for _, size in blocks)

    def _locate(self, i: int) -> tuple[int, int]:
        for value, size in self.blocks:
            if i < size:
                return value, i
            i -= size
        raise IndexError(i)

    def item_at(self, i: int) -> Optional[Item]:
        raise NotImplementedError

    def __iter__(self) -> Iterator[Item]:
        for i in range(self.raw_size):
            item = self.item_at(i)
            if item is not None:
                yield item


class _ConstructorFamily(Family):
    def __init__(self, spec: FamilySpec, key: str, build):
        values = _values(spec, key)
        super().__init__(spec, [(v, 1) for v in values])
        self._build = build

    def item_at(self, i: int) -> Item:
        value, _ = self._locate(i)
        return self._build(value)


class _FixedFamily(Family):
    def __init__(self, spec: FamilySpec, graph: Graph):
        super().__init__(spec, [(0, 1)])
        self._graph = graph

    def item_at(self, i: int) -> Item:
        self._locate(i)
        return self._graph


class _PruferTreeFamily(Family):
    def __init__(self, spec: FamilySpec):
        values = _values(spec, "n")
        for n in values:
            if not TREE_MIN_N <= n <= TREE_MAX_N:
                raise GraphError(f"prufer-trees supports n in {TREE_MIN_N}..{TREE_MAX_N}")
        super().__init__(spec, [(n, n ** (n - 2)) for n in values])

    def item_at(self, i: int) -> Item:
        n, j = self._locate(i)
        return tree_from_prufer_index(j, n)


class _TreePlusEFamily(Family):
    def __init__(self, spec: FamilySpec):
        values = _values(spec, "n")
        for n in values:
            if not TREE_PLUS_E_MIN_N <= n <= TREE_PLUS_E_MAX_N:
                raise GraphError(
                    f"tree-plus-e supports n in {TREE_PLUS_E_MIN_N}..{TREE_PLUS_E_MAX_N}"
                )
        blocks = []
        for n in values:
            npe = n * (n - 1) // 2 - (n - 1)
            blocks.append((n, n ** (n - 2) * npe))
        super().__init__(spec, blocks)
        self._last: tuple[int, int, Graph, list[tuple[int, int]]] | None = None

    def item_at(self, i: int) -> Item:
        n, j = self._locate(i)
        npe = n * (n - 1) // 2 - (n - 1)
        tree_idx, e_idx = divmod(j, npe)
        if self._last and self._last[0] == n and self._last[1] == tree_idx:
            tree, ne = self._last[2], self._last[3]
        else:
            tree = tree_from_prufer_index(tree_idx, n)
            ne = nonedges(tree)
            self._last = (n, tree_idx, tree, ne)
        edge = ne[e_idx]
        return TreePlusE(tree, edge, tree.add_edge(*edge))


class _LabeledConnectedFamily(Family):
    def __init__(self, spec: FamilySpec):
        values = _values(spec, "n")
        for n in values:
            _check_connected_range(n)
        super().__init__(spec, [(n, 1 << (n * (n - 1) // 2)) for n in values])
        self._pairs = {n: list(combinations(range(n), 2)) for n in values}

    def item_at(self, i: int) -> Optional[Item]:
        n, mask = self._locate(i)
        g = graph_from_edge_mask(mask, n, self._pairs[n])
        return g if g.is_connected() else None


class _PartialSunFamily(Family):
    """All partial n-suns: every U subset of cycle positions gets one leaf."""

    def __init__(self, spec: FamilySpec):
        values = _values(spec, "n")
        for n in values:
            if n < 3:
                raise GraphError("partial-suns needs n >= 3")
        super().__init__(spec, [(n, 1 << n) for n in values])

    def item_at(self, i: int) -> Item:
        n, mask = self._locate(i)
        counts = [mask >> p & 1 for p in range(n)]
        return SunItem(sun_graph(n, counts), n, tuple(counts))


class _GeneralizedSunFamily(Family):
    """All generalized partial n-suns with per-vertex leaf counts 0..max."""

    def __init__(self, spec: FamilySpec):
        values = _values(spec, "n")
        self._max = spec.params.get("max", 2)
        if not isinstance(self._max, int) or self._max < 1:
            raise GraphError("generalized-suns needs integer max >= 1")
        for n in values:
            if n < 3:
                raise GraphError("generalized-suns needs n >= 3")
        base = self._max + 1
        super().__init__(spec, [(n, base**n) for n in values])

    def item_at(self, i: int) -> Item:
        n, code = self._locate(i)
        base = self._max + 1
        counts = [0] * n
        for p in range(n):
            code, counts[p] = divmod(code, base)
        return SunItem(sun_graph(n, counts), n, tuple(counts))


def _build_singleton(spec: FamilySpec) -> Graph:
    name = spec.family
    if name == "path":
        return path_graph(_int_param(spec, "n"))
    if name == "cycle":
        return cycle_graph(_int_param(spec, "n"))
    if name == "complete":
        return complete_graph(_int_param(spec, "n"))
    if name == "complete-bipartite":
        return complete_bipartite_graph(_int_param(spec, "s"), _int_param(spec, "t"))
    if name == "comb":
        return comb_graph(_int_param(spec, "k"))
    if name == "comb-plus-e":
        return comb_plus_e_graph(_int_param(spec, "k"))
    if name == "alternating-sun":
        return alternating_sun_graph(_int_param(spec, "k"))
    if name == "grid":
        return grid_graph(_int_param(spec, "s"))
    if name == "sun":
        n = _int_param(spec, "n")
        if "segments" in spec.params:
            seg = spec.params["segments"]
            sizes = seg if isinstance(seg, list) else [seg]
            return sun_from_segments(n, sizes)
        u = spec.params.get("u")
        if isinstance(u, int):
            u = [u]
        if not isinstance(u, list):
            raise GraphError("sun needs u=<leaf counts> or segments=<sizes>")
        return sun_graph(n, u)
    raise GraphError(f"unknown constructor family {name!r}")


_SINGLETON_KEYS = {
    "path": "n",
    "cycle": "n",
    "complete": "n",
    "comb": "k",
    "comb-plus-e": "k",
    "alternating-sun": "k",
    "grid": "s",
}


def generate(spec: FamilySpec) -> Graph:
    """Build the single graph described by a constructor family spec."""
    return _build_singleton(spec)


def family_stream(spec: FamilySpec) -> Family:
    """A shardable stream over the family described by spec."""
    name = spec.family
    if name == "prufer-trees":
        return _PruferTreeFamily(spec)
    if name == "tree-plus-e":
        return _TreePlusEFamily(spec)
    if name == "labeled-connected":
        return _LabeledConnectedFamily(spec)
    if name == "partial-suns":
        return _PartialSunFamily(spec)
    if name == "generalized-suns":
        return _GeneralizedSunFamily(spec)
    if name in _SINGLETON_KEYS:
        key = _SINGLETON_KEYS[name]

        def build(value: int, _name: str = name, _key: str = key) -> Graph:
            return _build_singleton(FamilySpec(_name, {_key: value}))

        return _ConstructorFamily(spec, key, build)
    if name in ("sun", "complete-bipartite"):
        return _FixedFamily(spec, _build_singleton(spec))
    raise GraphError(f"unknown family {name!r}")
