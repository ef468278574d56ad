import itertools

import pytest

from zsdl.graph_core import Graph, GraphError
from zsdl.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    sun_graph,
)
from zsdl.zero_forcing import (
    closure_mask,
    forcing_closure,
    is_zero_forcing_set,
    partial_sun_Z,
    z_cut_vertex_lower_bound,
    zero_forcing_number,
)


def brute_force_z(g: Graph) -> int:
    """Independent oracle: try every subset in size order via the predicate."""
    for k in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if is_zero_forcing_set(g, combo):
                return k
    raise AssertionError


class TestClosure:
    def test_path_forces_along_itself(self):
        ch = forcing_closure(path_graph(4), [0])
        assert ch.forces == ((0, 1), (1, 2), (2, 3))
        assert ch.final_black == (0, 1, 2, 3)

    def test_cycle_single_vertex_stuck(self):
        ch = forcing_closure(cycle_graph(4), [0])
        assert ch.forces == ()
        assert ch.final_black == (0,)

    def test_triangle_single_vertex_stuck(self):
        ch = forcing_closure(complete_graph(3), [1])
        assert ch.forces == () and ch.final_black == (1,)

    def test_chronicle_consistency(self):
        g = grid_graph(3)
        ch = forcing_closure(g, [0, 1, 2])
        black = set(ch.initial_black)
        for u, v in ch.forces:
            assert u in black and v not in black
            white_nbrs = [w for w in g.neighbors(u) if w not in black]
            assert white_nbrs == [v]
            black.add(v)
        assert tuple(sorted(black)) == ch.final_black

    def test_out_of_range_vertex(self):
        with pytest.raises(GraphError):
            forcing_closure(path_graph(3), [5])


class TestIsZeroForcingSet:
    def test_cycle_adjacent_pair(self):
        assert is_zero_forcing_set(cycle_graph(4), [0, 1])

    def test_cycle_antipodal_pair(self):
        assert not is_zero_forcing_set(cycle_graph(4), [0, 2])

    def test_full_vertex_set(self):
        g = grid_graph(2)
        assert is_zero_forcing_set(g, range(g.n))


class TestZeroForcingNumber:
    @pytest.mark.parametrize("n", [2, 3, 7, 12])
    def test_paths(self, n):
        assert zero_forcing_number(path_graph(n)).value == 1

    def test_complete(self):
        assert zero_forcing_number(complete_graph(5)).value == 4

    def test_grid_3(self):
        assert zero_forcing_number(grid_graph(3)).value == 3

    def test_cycle_7_vs_oracle(self):
        g = cycle_graph(7)
        res = zero_forcing_number(g)
        assert res.value == 2 == brute_force_z(g)

    def test_witness_is_canonical_minimum(self):
        g = cycle_graph(5)
        res = zero_forcing_number(g)
        assert res.witness == (0, 1)
        assert is_zero_forcing_set(g, res.witness)
        assert len(res.witness) == res.value

    def test_single_vertex(self):
        assert zero_forcing_number(Graph.from_edges(1, [])).value == 1

    def test_empty_graph(self):
        assert zero_forcing_number(Graph.from_edges(0, [])).value == 0

    def test_disconnected_additive(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
        res = zero_forcing_number(g)
        assert res.value == 2
        assert res.witness == (0, 2)

    def test_bipartite(self):
        assert zero_forcing_number(complete_bipartite_graph(2, 3)).value == 3


class TestPartialSunFormula:
    def test_segments_3_1(self):
        assert partial_sun_Z(6, [3, 1]) == 3

    def test_bare_cycle_branch(self):
        assert partial_sun_Z(6, []) == 2

    def test_alternating_segments(self):
        assert partial_sun_Z(6, [1, 1, 1]) == 3

    def test_full_single_segment(self):
        assert partial_sun_Z(5, [5]) == 3

    def test_infeasible_layout(self):
        with pytest.raises(GraphError):
            partial_sun_Z(6, [3, 3])
        with pytest.raises(GraphError):
            partial_sun_Z(4, [5])
        with pytest.raises(GraphError):
            partial_sun_Z(6, [0, 2])

    def test_agrees_with_solver_on_realized_graphs(self):
        # every U subset of C_n for n = 3..5; acceptance covers n <= 7
        for n in range(3, 6):
            for mask in range(1 << n):
                counts = [mask >> i & 1 for i in range(n)]
                sizes = _segment_sizes(counts)
                g = sun_graph(n, counts)
                assert partial_sun_Z(n, sizes) == zero_forcing_number(g).value


def _segment_sizes(counts):
    n = len(counts)
    if all(counts):
        return [n]
    if not any(counts):
        return []
    anchor = next(i for i in range(n) if not counts[i])
    sizes, run = [], 0
    for off in range(1, n + 1):
        if counts[(anchor + off) % n]:
            run += 1
        elif run:
            sizes.append(run)
            run = 0
    if run:
        sizes.append(run)
    return sizes


class TestCutVertexBound:
    def test_star_center(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert z_cut_vertex_lower_bound(star, 0) == 1

    def test_bowtie_shared_vertex(self):
        bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        assert z_cut_vertex_lower_bound(bowtie, 2) == 3
        assert zero_forcing_number(bowtie).value >= 3

    def test_path_middle(self):
        assert z_cut_vertex_lower_bound(path_graph(5), 2) == 1

    def test_non_cut_vertex_rejected(self):
        with pytest.raises(GraphError):
            z_cut_vertex_lower_bound(cycle_graph(4), 0)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            z_cut_vertex_lower_bound(Graph.from_edges(3, [(0, 1)]), 0)

    def test_bound_below_z_small_graphs(self):
        # exhaustive over connected graphs on 5 vertices; n = 6 in acceptance
        from zsdl.families import enumerate_labeled_connected

        for g in enumerate_labeled_connected(5):
            z = zero_forcing_number(g).value
            for v in range(g.n):
                rest, _ = g.induced([u for u in range(g.n) if u != v])
                if not rest.is_connected():
                    assert z_cut_vertex_lower_bound(g, v) <= z


class TestClosureMask:
    def test_matches_chronicle(self):
        g = grid_graph(3)
        for s in [(0,), (0, 1, 2), (4,), (0, 2, 6, 8)]:
            mask = 0
            for v in s:
                mask |= 1 << v
            ch = forcing_closure(g, s)
            expect = 0
            for v in ch.final_black:
                expect |= 1 << v
            assert closure_mask(g.adj, g.n, mask) == expect
