import itertools

import pytest

from zsdl.graph_core import Graph, GraphError
from zsdl.families import comb_graph, enumerate_trees, path_graph
from zsdl.strong_resolving import strong_metric_dimension, metric_dimension
from zsdl.tree_structure import (
    dim_equals_z_characterization,
    path_cover_number,
    sdim_tree_closed_form,
    tree_profile,
    z_equals_sdim_characterization,
)
from zsdl.zero_forcing import zero_forcing_number


def spider(legs: int, length: int) -> Graph:
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def double_star() -> Graph:
    # centers 0, 1 adjacent; two leaves each
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def subdivided_double_star() -> Graph:
    # centers 0, 1 joined through the degree-2 vertex 6
    return Graph.from_edges(7, [(0, 6), (6, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def max_linear_forest_oracle(t: Graph) -> int:
    """Most edges of any spanning forest of paths, by edge-subset enumeration."""
    edges = list(t.edges())
    best = 0
    for r in range(len(edges), 0, -1):
        if r <= best:
            break
        for subset in itertools.combinations(edges, r):
            deg = [0] * t.n
            ok = True
            for u, v in subset:
                deg[u] += 1
                deg[v] += 1
                if deg[u] > 2 or deg[v] > 2:
                    ok = False
                    break
            if ok:
                best = max(best, r)
                break
    return best


class TestTreeProfile:
    def test_spider(self):
        t = spider(3, 2)
        p = tree_profile(t)
        assert p.major_vertices == (0,)
        assert p.terminal_degree[0] == 3
        assert p.interior_deg2 == ()
        assert len(p.exterior_deg2) == 3  # one mid vertex per leg

    def test_double_star(self):
        p = tree_profile(double_star())
        assert p.major_vertices == (0, 1)
        assert p.terminal_degree == {0: 2, 1: 2}
        assert p.interior_deg2 == () and p.exterior_deg2 == ()

    def test_subdivided_double_star(self):
        p = tree_profile(subdivided_double_star())
        assert p.interior_deg2 == (6,)
        assert p.exterior_deg2 == ()

    def test_equidistant_leaf_counts_for_neither(self):
        # path of length 4 between two majors, leaf hanging off the middle
        t = Graph.from_edges(
            9,
            [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8)],
        )
        # leaf 1, 2 belong to 0; leaves 7, 8 belong to 6; the middle vertex 4
        # hangs nothing here, so totals line up
        p = tree_profile(t)
        assert p.terminal_degree[0] == 2 and p.terminal_degree[6] == 2

    def test_path_has_no_majors(self):
        p = tree_profile(path_graph(5))
        assert p.major_vertices == () and p.exterior_major == ()
        assert p.interior_deg2 == (1, 2, 3)

    def test_rejects_non_tree(self):
        with pytest.raises(GraphError):
            tree_profile(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))

    def test_rejects_single_vertex(self):
        with pytest.raises(GraphError):
            tree_profile(Graph.from_edges(1, []))

    def test_deg2_partition(self):
        for t in enumerate_trees(6):
            p = tree_profile(t)
            deg2 = {v for v in range(t.n) if t.degree(v) == 2}
            assert set(p.interior_deg2) | set(p.exterior_deg2) == deg2
            assert set(p.interior_deg2) & set(p.exterior_deg2) == set()
            assert set(p.exterior_major) <= set(p.major_vertices)
            assert sum(p.terminal_degree.values()) <= len(p.leaves)


class TestPathCover:
    def test_path(self):
        pc = path_cover_number(path_graph(6))
        assert pc.count == 1 and len(pc.paths) == 1

    def test_star(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert path_cover_number(star).count == 2

    def test_comb_4(self):
        t = comb_graph(4)
        assert path_cover_number(t).count == t.n - max_linear_forest_oracle(t)
        assert path_cover_number(t).count == 3

    def test_single_vertex(self):
        pc = path_cover_number(Graph.from_edges(1, []))
        assert pc.count == 1 and pc.paths == ((0,),)

    def test_witness_is_induced_path_partition(self):
        for t in itertools.islice(enumerate_trees(7), 0, 2000, 13):
            pc = path_cover_number(t)
            seen = set()
            for path in pc.paths:
                assert not (set(path) & seen)
                seen.update(path)
                for a, b in zip(path, path[1:]):
                    assert t.has_edge(a, b)
                # induced: no chords between non-consecutive path vertices
                for i, a in enumerate(path):
                    for b in path[i + 2:]:
                        assert not t.has_edge(a, b)
            assert seen == set(range(t.n))
            assert len(pc.paths) == pc.count

    def test_matches_brute_force_all_trees_n6(self):
        for t in enumerate_trees(6):
            assert path_cover_number(t).count == t.n - max_linear_forest_oracle(t)

    def test_matches_brute_force_sampled_n8(self):
        for t in itertools.islice(enumerate_trees(8), 0, 262144, 2111):
            assert path_cover_number(t).count == t.n - max_linear_forest_oracle(t)

    def test_rejects_non_tree(self):
        with pytest.raises(GraphError):
            path_cover_number(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


class TestClosedFormsAndCharacterizations:
    def test_sdim_closed_form(self):
        assert sdim_tree_closed_form(path_graph(8)) == 1
        star5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
        assert sdim_tree_closed_form(star5) == 4
        assert sdim_tree_closed_form(comb_graph(4)) == 5

    def test_closed_form_matches_solver(self):
        for t in enumerate_trees(6):
            assert sdim_tree_closed_form(t) == strong_metric_dimension(t).value

    def test_z_sdim_characterization_path(self):
        assert z_equals_sdim_characterization(path_graph(5))

    def test_z_sdim_characterization_double_star(self):
        t = double_star()
        assert not z_equals_sdim_characterization(t)
        assert zero_forcing_number(t).value == 2
        assert strong_metric_dimension(t).value == 3

    def test_z_sdim_characterization_subdivided(self):
        t = subdivided_double_star()
        assert z_equals_sdim_characterization(t)
        assert zero_forcing_number(t).value == 3
        assert strong_metric_dimension(t).value == 3

    def test_dim_z_characterization_spider(self):
        t = spider(3, 2)
        assert dim_equals_z_characterization(t)
        assert metric_dimension(t).value == zero_forcing_number(t).value == 2

    def test_dim_z_characterization_comb(self):
        assert not dim_equals_z_characterization(comb_graph(4))

    def test_dim_z_characterization_double_star(self):
        t = double_star()
        assert dim_equals_z_characterization(t)
        assert metric_dimension(t).value == zero_forcing_number(t).value == 2

    def test_dim_z_characterization_rejects_paths(self):
        with pytest.raises(GraphError):
            dim_equals_z_characterization(path_graph(6))
