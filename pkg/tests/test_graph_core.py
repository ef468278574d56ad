import itertools
import random

import networkx as nx
import pytest

from zsdl.graph_core import (
    Graph,
    GraphError,
    GraphKind,
    all_pairs_distances,
    classify,
    connected_components,
    encode_graph6,
    leaves,
    parse_graph6,
)
from zsdl.families import (
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


class TestGraphType:
    def test_from_edges_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 0)])

    def test_from_edges_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 2)])

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_neighbors_sorted(self):
        g = Graph.from_edges(4, [(2, 0), (2, 3), (2, 1)])
        assert g.neighbors(2) == (0, 1, 3)

    def test_induced_keeps_id_map(self):
        g = cycle_graph(5)
        sub, ids = g.induced([1, 2, 4])
        assert ids == (1, 2, 4)
        assert sub.has_edge(0, 1)  # 1-2 survives
        assert not sub.has_edge(0, 2) and not sub.has_edge(1, 2)


class TestGraph6:
    # cross-checked against the networkx codec as reference
    @pytest.mark.parametrize(
        "text,n,edges",
        [
            ("A_", 2, [(0, 1)]),
            ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
            ("Bg", 3, [(0, 1), (1, 2)]),
            ("@", 1, []),
            ("?", 0, []),
        ],
    )
    def test_known_strings(self, text, n, edges):
        g = parse_graph6(text)
        assert g.n == n
        assert sorted(g.edges()) == sorted(edges)
        assert encode_graph6(g) == text
        if n:
            ref = nx.from_graph6_bytes(text.encode())
            assert sorted(ref.edges()) == sorted(g.edges())

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<Bw") == parse_graph6("Bw")

    def test_matches_networkx_exhaustive_n4(self):
        for mask in range(1 << 6):
            pairs = list(itertools.combinations(range(4), 2))
            edges = [pairs[i] for i in range(6) if mask >> i & 1]
            g = Graph.from_edges(4, edges)
            ours = encode_graph6(g)
            ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert ours == ref
            assert parse_graph6(ours) == g

    def test_matches_networkx_random(self):
        rng = random.Random(7)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 30), rng.random())
            ours = encode_graph6(g)
            ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert ours == ref
            assert parse_graph6(ours) == g

    def test_n62_roundtrip(self):
        g = path_graph(62)
        assert parse_graph6(encode_graph6(g)) == g

    def test_rejects_n_above_62(self):
        with pytest.raises(GraphError):
            encode_graph6(path_graph(63))
        with pytest.raises(GraphError):
            parse_graph6("~??")  # long-form size marker

    def test_rejects_trailing_garbage(self):
        with pytest.raises(GraphError):
            parse_graph6("A_?")

    def test_rejects_short_input(self):
        with pytest.raises(GraphError):
            parse_graph6("D")

    def test_rejects_nonzero_padding(self):
        # K_2 has one data bit; the remaining five must be zero
        bad = "A" + chr(63 + 0b110000)
        with pytest.raises(GraphError):
            parse_graph6(bad)

    def test_rejects_byte_out_of_range(self):
        with pytest.raises(GraphError):
            parse_graph6("A\x20")


class TestDistances:
    def test_path_endpoints(self):
        dm = all_pairs_distances(path_graph(3))
        assert dm.d(0, 2) == 2

    def test_cycle_antipodal(self):
        dm = all_pairs_distances(cycle_graph(6))
        assert dm.d(0, 3) == 3

    def test_complete_all_one(self):
        dm = all_pairs_distances(complete_graph(4))
        assert all(dm.d(u, v) == 1 for u in range(4) for v in range(4) if u != v)

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            all_pairs_distances(Graph.from_edges(3, [(0, 1)]))

    def test_matrix_invariants_random(self):
        rng = random.Random(11)
        checked = 0
        while checked < 50:
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            if not g.is_connected():
                continue
            checked += 1
            dm = all_pairs_distances(g)
            for u in range(g.n):
                assert dm.d(u, u) == 0
                for v in range(g.n):
                    assert dm.d(u, v) == dm.d(v, u)
                    assert (dm.d(u, v) == 1) == g.has_edge(u, v)
                    for w in range(g.n):
                        assert dm.d(u, w) <= dm.d(u, v) + dm.d(v, w)


class TestStructure:
    def test_leaves_path(self):
        assert leaves(path_graph(5)) == (0, 4)

    def test_leaves_star(self):
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        assert leaves(star) == (1, 2, 3)

    def test_leaves_cycle(self):
        assert leaves(cycle_graph(5)) == ()

    def test_leaves_match_degree_sequence(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 10), 0.4)
            assert len(leaves(g)) == sum(1 for v in range(g.n) if g.degree(v) == 1)

    def test_classify_tree(self):
        t = Graph.from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)])
        cls = classify(t)
        assert cls.kind is GraphKind.TREE and cls.cycle_rank == 0

    def test_classify_unicyclic(self):
        g = cycle_graph(5).add_edge(0, 4)  # already an edge: still C_5
        g = Graph.from_edges(6, list(cycle_graph(5).edges()) + [(0, 5)])
        cls = classify(g)
        assert cls.kind is GraphKind.UNICYCLIC and cls.cycle_rank == 1

    def test_classify_grid(self):
        cls = classify(grid_graph(3))
        assert cls.kind is GraphKind.OTHER and cls.cycle_rank == 4

    def test_classify_disconnected_rejected(self):
        with pytest.raises(GraphError):
            classify(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_classify_rank_zero_iff_acyclic(self):
        rng = random.Random(5)
        checked = 0
        while checked < 40:
            g = random_graph(rng, rng.randint(2, 8), 0.35)
            if not g.is_connected():
                continue
            checked += 1
            assert (classify(g).cycle_rank == 0) == nx.is_forest(to_nx(g))

    def test_components_connected(self):
        g = cycle_graph(4)
        comps = connected_components(g)
        assert len(comps) == 1 and comps[0][0] == g

    def test_components_two_paths(self):
        g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
        comps = connected_components(g)
        assert [c.n for c, _ in comps] == [2, 3]
        assert [ids for _, ids in comps] == [(0, 1), (2, 3, 4)]

    def test_components_singletons(self):
        comps = connected_components(Graph.from_edges(3, []))
        assert [c.n for c, _ in comps] == [1, 1, 1]
