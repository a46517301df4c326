import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import cacti, connected_graphs
from kflab.constructions import (
    build_extremal_chain,
    build_gadget_g10,
    build_minimal_star,
    build_triangle_chain,
)
from kflab.graph import (
    CYCLE,
    EDGE,
    DisconnectedGraphError,
    Graph,
    GraphError,
    block_cut_tree,
    coalesce,
    cycle_graph,
    is_cactus,
    path_graph,
    shortest_path_distance,
)

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
K4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


class TestGraph:
    def test_rejects_self_loop_and_duplicates(self):
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 0)])
        with pytest.raises(GraphError):
            Graph.from_edges(2, [(0, 1), (1, 0)])

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(GraphError):
            Graph(2, [[1], []])

    def test_edges_and_degree(self):
        g = path_graph(3)
        assert g.edges() == ((0, 1), (1, 2))
        assert [g.degree(v) for v in range(3)] == [1, 2, 1]

    def test_relabel_requires_permutation(self):
        with pytest.raises(GraphError):
            path_graph(3).relabel([0, 0, 1])


class TestShortestPath:
    def test_path_endpoints(self):
        assert shortest_path_distance(path_graph(3), 0, 2) == 2

    def test_self_distance(self):
        assert shortest_path_distance(cycle_graph(5), 3, 3) == 0

    def test_antipodal_c6_matches_bfs(self):
        assert shortest_path_distance(cycle_graph(6), 0, 3) == nx.shortest_path_length(to_nx(cycle_graph(6)), 0, 3) == 3

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError):
            shortest_path_distance(Graph.from_edges(3, [(0, 1)]), 0, 2)

    def test_bad_vertex_raises(self):
        with pytest.raises(GraphError):
            shortest_path_distance(path_graph(3), 0, 7)

    @given(connected_graphs(nmax=12))
    @settings(max_examples=40)
    def test_agrees_with_networkx(self, g):
        ref = dict(nx.shortest_path_length(to_nx(g), 0))
        assert [shortest_path_distance(g, 0, v) for v in range(g.order)] == [ref[v] for v in range(g.order)]


class TestBlockCutTree:
    def test_triangle(self):
        bct = block_cut_tree(cycle_graph(3))
        assert [b.kind for b in bct.blocks] == [CYCLE]
        assert bct.cut_vertices == frozenset()

    def test_bowtie(self):
        bct = block_cut_tree(BOWTIE)
        assert sorted(b.kind for b in bct.blocks) == [CYCLE, CYCLE]
        assert bct.cut_vertices == {2}

    def test_p4(self):
        bct = block_cut_tree(path_graph(4))
        assert [b.kind for b in bct.blocks] == [EDGE] * 3
        assert bct.cut_vertices == {1, 2}

    def test_single_vertex(self):
        bct = block_cut_tree(Graph(1, [()]))
        assert bct.blocks == () and bct.is_cactus

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError):
            block_cut_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))

    def test_cycle_vertices_in_ring_order(self):
        g = Graph.from_edges(5, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)])
        ring = block_cut_tree(g).blocks[0].vertices
        assert all(g.has_edge(ring[i], ring[(i + 1) % 5]) for i in range(5))

    @given(connected_graphs(nmax=12))
    @settings(max_examples=60)
    def test_matches_networkx_biconnected_components(self, g):
        bct = block_cut_tree(g)
        if g.order == 1:
            return
        ours = sorted(tuple(sorted(b.edges)) for b in bct.blocks)
        theirs = sorted(tuple(sorted(tuple(sorted(e)) for e in comp))
                        for comp in nx.biconnected_component_edges(to_nx(g)))
        assert ours == theirs
        assert bct.cut_vertices == set(nx.articulation_points(to_nx(g)))

    @given(connected_graphs(nmax=12))
    @settings(max_examples=40)
    def test_blocks_partition_edges(self, g):
        bct = block_cut_tree(g)
        assert sum(len(b.edges) for b in bct.blocks) == g.size
        for a, b in itertools.combinations(bct.blocks, 2):
            shared = set(a.vertices) & set(b.vertices)
            assert len(shared) <= 1 and shared <= bct.cut_vertices


class TestIsCactus:
    def test_k4_is_not_cactus(self):
        assert is_cactus(K4) == (False, 0)

    def test_tree(self):
        assert is_cactus(Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])) == (True, 0)

    def test_bowtie(self):
        assert is_cactus(BOWTIE) == (True, 2)

    def test_disconnected_is_not_cactus(self):
        assert is_cactus(Graph.from_edges(3, [(0, 1)])) == (False, 0)

    def test_theta_graph_is_not_cactus(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
        assert not is_cactus(g)[0]

    @given(cacti(nmax=20))
    def test_cycle_count_is_cyclomatic_number(self, g):
        ok, t = is_cactus(g)
        assert ok
        assert t == g.size - g.order + 1
        assert 0 <= t <= (g.order - 1) // 2

    @pytest.mark.parametrize("build, t", [
        (lambda: build_triangle_chain(4).graph, 4),
        (lambda: build_extremal_chain((11, 3)).graph, 3),
        (lambda: build_minimal_star((9, 2)).graph, 2),
        (lambda: build_gadget_g10(6).graph, 1),
    ])
    def test_constructions_are_cacti(self, build, t):
        assert is_cactus(build()) == (True, t)


class TestCoalesce:
    def test_p2_p2_is_p3(self):
        g, x, _ = coalesce(path_graph(2), 1, path_graph(2), 0)
        assert g == path_graph(3) and x == 1

    def test_triangles_give_bowtie(self):
        g, x, image = coalesce(cycle_graph(3), 0, cycle_graph(3), 0)
        assert g.order == 5 and is_cactus(g) == (True, 2)
        assert image[0] == x

    def test_single_vertex_is_identity(self):
        g, _, _ = coalesce(BOWTIE, 3, Graph(1, [()]), 0)
        assert g == BOWTIE

    def test_invalid_vertex(self):
        with pytest.raises(GraphError):
            coalesce(path_graph(2), 5, path_graph(2), 0)

    @given(cacti(nmax=8), cacti(nmax=8))
    @settings(max_examples=50)
    def test_order_law(self, g1, g2):
        rng = random.Random(g1.order * 31 + g2.order)
        g, _, _ = coalesce(g1, rng.randrange(g1.order), g2, rng.randrange(g2.order))
        assert g.order == g1.order + g2.order - 1
        assert g.size == g1.size + g2.size
