"""Registry of verifiable claims over graph families.

Each claim pairs an id with a mathematical statement and an evaluator that
either accepts an item or produces a counterexample record. Evaluators pull
invariant values through an EvalContext, which memoizes them per isomorphism
certificate (trees and unicyclic graphs) so that exhaustive labeled scans
stay within their time budgets; every labeled graph is still enumerated and
checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .canon import certificate
from .graph_core import (
    Graph,
    GraphError,
    bits,
    connected_components,
    encode_graph6,
    leaves,
    parse_graph6,
)
from .families import Item, SunItem, TreePlusE, item_graph
from .strong_resolving import (
    metric_dimension,
    mmd_graph,
    mmd_vertex_cover_lower_bound,
    strong_metric_dimension,
)
from .tree_structure import (
    dim_equals_z_characterization,
    path_cover_number,
    z_equals_sdim_characterization,
)
from .unicyclic import StepKind, next_trim_step
from .zero_forcing import partial_sun_Z, z_cut_vertex_lower_bound, zero_forcing_number


class EvalContext:
    """Per-worker invariant cache keyed by isomorphism certificate."""

    def __init__(self) -> None:
        self._by_cert: dict = {}
        self._item: dict = {}

    def begin_item(self) -> None:
        self._item.clear()

    def _slot(self, g: Graph) -> dict:
        key = g.adj
        slot = self._item.get(key)
        if slot is None:
            cert = certificate(g)
            slot = self._by_cert.setdefault(cert, {}) if cert is not None else {}
            self._item[key] = slot
        return slot

    def _get(self, g: Graph, key: str, compute: Callable[[Graph], object]) -> object:
        slot = self._slot(g)
        val = slot.get(key)
        if val is None:
            val = compute(g)
            slot[key] = val
        return val

    def z(self, g: Graph) -> int:
        if g.n == 0:
            return 0
        if not g.is_connected():
            return sum(self.z(c) for c, _ in connected_components(g))
        return self._get(g, "z", lambda h: zero_forcing_number(h).value)

    def sdim(self, g: Graph) -> int:
        if g.n == 0:
            return 0
        if not g.is_connected():
            return sum(self.sdim(c) for c, _ in connected_components(g))
        return self._get(g, "sdim", lambda h: strong_metric_dimension(h).value)

    def dim(self, g: Graph) -> int:
        return self._get(g, "dim", lambda h: metric_dimension(h).value)

    def path_cover(self, g: Graph) -> int:
        return self._get(g, "pc", lambda h: path_cover_number(h).count)

    def char_z_sdim(self, g: Graph) -> bool:
        return self._get(g, "char_zs", z_equals_sdim_characterization)

    def char_dim_z(self, g: Graph) -> Optional[bool]:
        def compute(h: Graph) -> Optional[bool]:
            try:
                return dim_equals_z_characterization(h)
            except GraphError:
                return None  # no major vertex

        slot = self._slot(g)
        if "char_dz" not in slot:
            slot["char_dz"] = compute(g)
        return slot["char_dz"]

    def mmd_cover(self, g: Graph) -> int:
        return self._get(
            g, "mmd_cover", lambda h: mmd_vertex_cover_lower_bound(mmd_graph(h))
        )


Values = dict[str, object]
Evaluator = Callable[[Item, EvalContext], Optional[Values]]
ExtremalFn = Callable[[Item, EvalContext], dict[str, object]]


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    families: tuple[str, ...]
    evaluate: Evaluator
    extremal: Optional[ExtremalFn] = None

    def accepts(self, family_name: str) -> bool:
        return family_name in self.families


_TREE_FAMILIES = ("prufer-trees",)
_TRIPLE_FAMILIES = ("tree-plus-e",)
_UNICYCLIC_FAMILIES = (
    "tree-plus-e",
    "partial-suns",
    "generalized-suns",
    "sun",
    "comb-plus-e",
    "alternating-sun",
    "cycle",
)
_SUN_FAMILIES = ("partial-suns", "generalized-suns", "sun")
_ANY_FAMILIES = (
    "prufer-trees",
    "tree-plus-e",
    "labeled-connected",
    "partial-suns",
    "generalized-suns",
    "sun",
    "path",
    "cycle",
    "complete",
    "complete-bipartite",
    "comb",
    "comb-plus-e",
    "alternating-sun",
    "grid",
)


def _sigma(g: Graph) -> int:
    return len(leaves(g))


def _eval_tree_pc(item: Item, ctx: EvalContext) -> Optional[Values]:
    z = ctx.z(item)
    pc = ctx.path_cover(item)
    if z != pc:
        return {"z": z, "path_cover": pc}
    return None


def _eval_tree_sdim_closed_form(item: Item, ctx: EvalContext) -> Optional[Values]:
    sdim = ctx.sdim(item)
    if sdim != _sigma(item) - 1:
        return {"sdim": sdim, "sigma": _sigma(item)}
    return None


def _eval_tree_z_leq_sdim(item: Item, ctx: EvalContext) -> Optional[Values]:
    z, sdim = ctx.z(item), ctx.sdim(item)
    if z > sdim:
        return {"z": z, "sdim": sdim}
    return None


def _ext_z_minus_sdim(item: Item, ctx: EvalContext) -> dict[str, object]:
    g = item_graph(item)
    return {"max_z_minus_sdim": ctx.z(g) - ctx.sdim(g)}


def _eval_tree_dim_leq_z(item: Item, ctx: EvalContext) -> Optional[Values]:
    dim, z = ctx.dim(item), ctx.z(item)
    if dim > z:
        return {"dim": dim, "z": z}
    return None


def _eval_tree_char_z_sdim(item: Item, ctx: EvalContext) -> Optional[Values]:
    pred = ctx.char_z_sdim(item)
    equal = ctx.z(item) == ctx.sdim(item)
    if pred != equal:
        return {
            "characterization": pred,
            "z": ctx.z(item),
            "sdim": ctx.sdim(item),
        }
    return None


def _eval_tree_char_dim_z(item: Item, ctx: EvalContext) -> Optional[Values]:
    pred = ctx.char_dim_z(item)
    dim, z = ctx.dim(item), ctx.z(item)
    if pred is None:
        # no major vertex: the tree is a path, where dim = Z = 1 trivially
        if dim == z == 1:
            return None
        return {"dim": dim, "z": z, "characterization": None}
    if pred != (dim == z):
        return {"characterization": pred, "dim": dim, "z": z}
    return None


def _eval_tree_pc_leq_sigma(item: Item, ctx: EvalContext) -> Optional[Values]:
    pc = ctx.path_cover(item)
    if pc > _sigma(item) - 1:
        return {"path_cover": pc, "sigma": _sigma(item)}
    return None


def _eval_g6_roundtrip(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    back = parse_graph6(encode_graph6(g))
    if back != g:
        return {"reencoded": encode_graph6(back)}
    return None


def _eval_unicyclic_z_leq_sdim(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    z, sdim = ctx.z(g), ctx.sdim(g)
    if z > sdim:
        return {"z": z, "sdim": sdim}
    return None


def _eval_edge_sdim_drop(item: Item, ctx: EvalContext) -> Optional[Values]:
    assert isinstance(item, TreePlusE)
    before = ctx.sdim(item.tree)
    after = ctx.sdim(item.graph)
    if after < before - 2:
        return {"sdim_tree": before, "sdim_plus_e": after, "edge": list(item.edge)}
    return None


def _eval_edge_z_step(item: Item, ctx: EvalContext) -> Optional[Values]:
    assert isinstance(item, TreePlusE)
    before = ctx.z(item.tree)
    after = ctx.z(item.graph)
    if not (before - 1 <= after <= before + 1):
        return {"z_tree": before, "z_plus_e": after, "edge": list(item.edge)}
    return None


def _eval_trim_contracts(item: Item, ctx: EvalContext) -> Optional[Values]:
    """Replay protected trimming; check the Z/sdim delta of every step."""
    cur = item_graph(item)
    z_cur, sdim_cur = ctx.z(cur), ctx.sdim(cur)
    while True:
        step = next_trim_step(cur, protect_cycle=True)
        if step is None:
            return None
        removed = set(step.removed_vertices())
        nxt, _ = cur.induced([v for v in range(cur.n) if v not in removed])
        z_nxt, sdim_nxt = ctx.z(nxt), ctx.sdim(nxt)
        dz = z_nxt - z_cur
        dsdim = sdim_nxt - sdim_cur
        if step.kind is StepKind.PERIPHERAL_LEAF:
            ok = dz == 0 and dsdim == 0
        elif step.kind is StepKind.ISOLATED_PATH:
            want_sdim = -1 if len(removed) >= 2 else 0  # order-1 graphs have sdim 0
            ok = dz == -1 and dsdim == want_sdim
        else:  # appropriate vertex; cycle protection keeps it off the cycle
            ok = dz == 1 and dsdim <= 1
        if not ok:
            return {
                "step": step.kind.value,
                "target": list(step.removed_vertices()),
                "delta_z": dz,
                "delta_sdim": dsdim,
                "stage_graph6": encode_graph6(cur),
            }
        cur, z_cur, sdim_cur = nxt, z_nxt, sdim_nxt


def _sun_segment_sizes(counts: tuple[int, ...]) -> list[int]:
    """Sizes of the maximal circular runs of positions with a leaf."""
    c = len(counts)
    if all(counts):
        return [c]
    if not any(counts):
        return []
    anchor = next(i for i in range(c) if not counts[i])
    sizes = []
    run = 0
    for off in range(1, c + 1):
        if counts[(anchor + off) % c]:
            run += 1
        elif run:
            sizes.append(run)
            run = 0
    if run:
        sizes.append(run)
    return sizes


def _eval_partial_sun_formula(item: Item, ctx: EvalContext) -> Optional[Values]:
    assert isinstance(item, SunItem)
    if any(c > 1 for c in item.leaf_counts):
        raise GraphError("partial-sun formula claim needs leaf counts <= 1")
    sizes = _sun_segment_sizes(item.leaf_counts)
    formula = partial_sun_Z(item.cycle_length, sizes)
    z = ctx.z(item.graph)
    if z != formula:
        return {"z": z, "formula": formula, "segments": sizes}
    return None


def _eval_general_bound(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    rank = g.edge_count() - g.n + 1
    z, sdim = ctx.z(g), ctx.sdim(g)
    if z > sdim + 3 * rank:
        return {"z": z, "sdim": sdim, "rank": rank}
    return None


def _ext_general_bound(item: Item, ctx: EvalContext) -> dict[str, object]:
    g = item_graph(item)
    rank = g.edge_count() - g.n + 1
    return {"max_z_minus_sdim_minus_3r": ctx.z(g) - ctx.sdim(g) - 3 * rank}


def _is_path_graph(g: Graph) -> bool:
    if g.n == 1:
        return True
    return (
        g.edge_count() == g.n - 1
        and all(g.degree(v) <= 2 for v in range(g.n))
        and g.is_connected()
    )


def _eval_path_sdim_one(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    if g.n < 2:
        return None
    sdim = ctx.sdim(g)
    is_path = _is_path_graph(g)
    if (sdim == 1) != is_path:
        return {"sdim": sdim, "is_path": is_path}
    return None


def _eval_cut_vertex_bound(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    z = ctx.z(g)
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest, _ = g.induced(bits(full & ~(1 << v)))
        if rest.n and not rest.is_connected():
            bound = z_cut_vertex_lower_bound(g, v)
            if bound > z:
                return {"cut_vertex": v, "bound": bound, "z": z}
    return None


def _eval_sdim_lower_bounds(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    sdim = ctx.sdim(g)
    sigma = _sigma(g)
    cover = ctx.mmd_cover(g)
    if sdim < sigma - 1 or sdim < cover:
        return {"sdim": sdim, "sigma": sigma, "mmd_cover": cover}
    return None


def _eval_dim_leq_sdim(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    dim, sdim = ctx.dim(g), ctx.sdim(g)
    if dim > sdim:
        return {"dim": dim, "sdim": sdim}
    return None


def _eval_mmd_cover_equality(item: Item, ctx: EvalContext) -> Optional[Values]:
    g = item_graph(item)
    sdim, cover = ctx.sdim(g), ctx.mmd_cover(g)
    if sdim != cover:
        return {"sdim": sdim, "mmd_cover": cover}
    return None


REGISTRY: dict[str, Claim] = {}


def _register(claim: Claim) -> None:
    if claim.id in REGISTRY:
        raise ValueError(f"duplicate claim id {claim.id}")
    REGISTRY[claim.id] = claim


for _claim in [
    Claim(
        "CLM-T-PC",
        "Z(T) = P(T) for every tree T",
        _TREE_FAMILIES,
        _eval_tree_pc,
    ),
    Claim(
        "CLM-T-SDIM",
        "sdim(T) = sigma(T) - 1 for every tree T on >= 2 vertices",
        _TREE_FAMILIES,
        _eval_tree_sdim_closed_form,
    ),
    Claim(
        "CLM-T-LEQ",
        "Z(T) <= sdim(T) for every tree T",
        _TREE_FAMILIES,
        _eval_tree_z_leq_sdim,
        extremal=_ext_z_minus_sdim,
    ),
    Claim(
        "CLM-T-DIMZ",
        "dim(T) <= Z(T) for every tree T",
        _TREE_FAMILIES,
        _eval_tree_dim_leq_z,
    ),
    Claim(
        "CLM-T-CHAR-ZSDIM",
        "Z(T) = sdim(T) iff every path between two major vertices of T has an "
        "interior degree-2 vertex",
        _TREE_FAMILIES,
        _eval_tree_char_z_sdim,
    ),
    Claim(
        "CLM-T-CHAR-DIMZ",
        "for trees with a major vertex: dim(T) = Z(T) iff T has no interior "
        "degree-2 vertex and every major vertex has terminal degree >= 2; "
        "paths have dim = Z = 1",
        _TREE_FAMILIES,
        _eval_tree_char_dim_z,
    ),
    Claim(
        "CLM-T-PCSIG",
        "P(T) <= sigma(T) - 1 for every tree T on >= 2 vertices",
        _TREE_FAMILIES,
        _eval_tree_pc_leq_sigma,
    ),
    Claim(
        "CLM-G6-ROUNDTRIP",
        "parse_graph6(encode_graph6(G)) reproduces G as a labeled graph",
        _ANY_FAMILIES,
        _eval_g6_roundtrip,
    ),
    Claim(
        "CLM-U-LEQ",
        "Z(G) <= sdim(G) for every connected unicyclic graph G",
        _UNICYCLIC_FAMILIES,
        _eval_unicyclic_z_leq_sdim,
        extremal=_ext_z_minus_sdim,
    ),
    Claim(
        "CLM-E-SDIM",
        "sdim(T+e) >= sdim(T) - 2 for every tree T and non-edge e",
        _TRIPLE_FAMILIES,
        _eval_edge_sdim_drop,
    ),
    Claim(
        "CLM-E-Z",
        "Z(T) - 1 <= Z(T+e) <= Z(T) + 1 for every tree T and non-edge e",
        _TRIPLE_FAMILIES,
        _eval_edge_z_step,
    ),
    Claim(
        "CLM-TRIM",
        "every cycle-protected trim step changes (Z, sdim) by: peripheral leaf "
        "(0, 0); isolated path (-1, -1) or (-1, 0) for a single vertex; "
        "appropriate vertex (+1, <= +1)",
        _UNICYCLIC_FAMILIES,
        _eval_trim_contracts,
    ),
    Claim(
        "CLM-SUN",
        "Z of a partial n-sun equals max(2, sum of ceil(|U_i|/2)) over its "
        "segments U_i",
        ("partial-suns", "sun"),
        _eval_partial_sun_formula,
    ),
    Claim(
        "CLM-GSUN-LEQ",
        "Z(H) <= sdim(H) for every generalized partial n-sun H",
        _SUN_FAMILIES,
        _eval_unicyclic_z_leq_sdim,
        extremal=_ext_z_minus_sdim,
    ),
    Claim(
        "CLM-GEN",
        "Z(G) <= sdim(G) + 3 r(G) for every connected graph G",
        _ANY_FAMILIES,
        _eval_general_bound,
        extremal=_ext_general_bound,
    ),
    Claim(
        "CLM-PATH-SDIM1",
        "sdim(G) = 1 iff G is a path, over connected graphs on >= 2 vertices",
        _ANY_FAMILIES,
        _eval_path_sdim_one,
    ),
    Claim(
        "CLM-CUTV",
        "for every cut vertex v of a connected graph G, the component bound "
        "sum Z(G_i) - k + 1 is <= Z(G)",
        _ANY_FAMILIES,
        _eval_cut_vertex_bound,
    ),
    Claim(
        "CLM-SDIM-LB",
        "sdim(G) >= sigma(G) - 1 and sdim(G) >= the minimum vertex cover of "
        "the MMD pair graph",
        _ANY_FAMILIES,
        _eval_sdim_lower_bounds,
    ),
    Claim(
        "CLM-DIM-SDIM",
        "dim(G) <= sdim(G) for every connected graph G",
        _ANY_FAMILIES,
        _eval_dim_leq_sdim,
    ),
    Claim(
        "CLM-MMD-EQ",
        "sdim(G) equals the minimum vertex cover of the MMD pair graph on "
        "every scanned graph (empirical finding)",
        _ANY_FAMILIES,
        _eval_mmd_cover_equality,
    ),
]:
    _register(_claim)
