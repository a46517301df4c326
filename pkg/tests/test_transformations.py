from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kflab.canon import canonical_certificate, is_isomorphic
from kflab.closed_forms import op3_gain, op5_gain
from kflab.constructions import (
    RootedGraph,
    build_extremal_chain,
    build_minimal_star,
    trivial,
)
from kflab.enumeration import enumerate_cacti, random_cactus
from kflab.graph import Graph, GraphError, cycle_graph, path_graph
from kflab.resistance import kirchhoff_index
from kflab.transformations import (
    STRICT,
    WEAK,
    CanonicalizationStuck,
    OperationDeclined,
    canonicalize_to_extremal,
    longest_path_endpoints,
    operation_I,
    operation_II,
    operation_III,
    operation_IV,
    operation_V,
)

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def rooted_path(m, label, at=0):
    return RootedGraph(path_graph(m), {label: at})


class TestLongestPath:
    def test_p5(self):
        assert longest_path_endpoints(path_graph(5)) == [(0, 4)]

    def test_c4(self):
        assert longest_path_endpoints(cycle_graph(4)) == [(0, 2), (1, 3)]

    def test_bowtie(self):
        assert longest_path_endpoints(BOWTIE) == [(0, 3), (0, 4), (1, 3), (1, 4)]

    def test_k1(self):
        assert longest_path_endpoints(Graph(1, [()])) == [(0, 0)]


class TestOperationI:
    def x_p5(self):
        return RootedGraph(path_graph(5), {"u": 2, "v": 2, "x1": 0, "x2": 4})

    def test_move_to_endpoint_increases(self):
        cert = operation_I(self.x_p5(), rooted_path(2, "a"), rooted_path(2, "b"), part=1)
        assert cert.hypotheses_hold and cert.delta > 0 and cert.claim_holds

    def test_part_two(self):
        cert = operation_I(self.x_p5(), rooted_path(2, "a"), rooted_path(2, "b"), part=2)
        assert cert.hypotheses_hold and cert.delta > 0
        assert is_isomorphic(cert.after, path_graph(7))

    def test_trivial_z_gives_zero_delta(self):
        cert = operation_I(self.x_p5(), rooted_path(2, "a"), RootedGraph(Graph(1, [()]), {"b": 0}), part=1)
        assert cert.delta == 0
        assert is_isomorphic(cert.before, cert.after)
        assert cert.claim_holds is None

    def test_bad_part(self):
        with pytest.raises(ValueError):
            operation_I(self.x_p5(), rooted_path(2, "a"), rooted_path(2, "b"), part=3)

    def test_mirror_swaps_ends(self):
        x = RootedGraph(path_graph(5), {"u": 3, "v": 3, "x1": 4, "x2": 0})
        y, z = rooted_path(2, "a"), rooted_path(2, "b")
        assert operation_I(x, y, z, mirror=True).details["orientation"] in ("direct", "mirrored")
        assert operation_I(x, y, z, mirror=True).hypotheses_hold

    def test_counterexample_to_part_one(self):
        # hypotheses all hold, yet moving Z to x2 lowers Kf: R(u, x2) < R(u, v) here
        X = Graph.from_edges(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7), (7, 8)])
        x = RootedGraph(X, {"x1": 0, "x2": 6, "v": 8, "u": 5})
        cert = operation_I(x, rooted_path(3, "a"), rooted_path(2, "b"), part=1, mirror=False)
        assert cert.hypotheses_hold
        assert (cert.kf_before, cert.kf_after) == (225, 222)
        assert cert.claim_holds is False
        assert cert.details["r_u_x2_minus_r_u_v"] < 0

    def test_vertex_count_preserved(self):
        cert = operation_I(self.x_p5(), rooted_path(3, "a"), rooted_path(4, "b"))
        assert cert.before.order == cert.after.order == 5 + 2 + 3


class TestOperationII:
    def test_triangle_with_path(self):
        x = RootedGraph(cycle_graph(3), {"x": 0, "u_2": 1})
        cert = operation_II(x, 3, rooted_path(2, "u_1"))
        assert cert.hypotheses_hold and cert.delta > 0
        assert cert.details["transmission_gap_formula"] == cert.details["transmission_gap_measured"]

    def test_trivial_g1(self):
        x = RootedGraph(cycle_graph(3), {"x": 0, "u_2": 1})
        cert = operation_II(x, 2, trivial(), "root")
        assert cert.delta >= 0
        assert not cert.hypotheses["g1_nontrivial"]

    def test_rejects_acyclic_x(self):
        with pytest.raises(OperationDeclined):
            operation_II(RootedGraph(path_graph(3), {"x": 0, "u_2": 2}), 3, rooted_path(2, "u_1"))

    def test_rejects_short_path(self):
        with pytest.raises(OperationDeclined):
            operation_II(RootedGraph(cycle_graph(3), {"x": 0, "u_2": 1}), 1, rooted_path(2, "u_1"))

    @given(st.integers(3, 8), st.integers(2, 5), st.integers(2, 5))
    @settings(max_examples=30)
    def test_cycle_instances(self, l, s, m):
        x = RootedGraph(cycle_graph(l), {"x": 0, "u_2": l // 2})
        cert = operation_II(x, s, rooted_path(m, "u_1"))
        assert cert.hypotheses_hold and cert.claim_holds
        assert cert.details["transmission_gap_formula"] == cert.details["transmission_gap_measured"]


class TestOperationIII:
    def test_k4_trivial(self):
        assert operation_III(trivial(), 4, "root").delta == Fraction(4, 3)

    def test_k4_p2(self):
        cert = operation_III(rooted_path(2, "u_1"), 4)
        assert cert.delta == Fraction(19, 6)
        assert cert.details["matches_closed_form"]

    def test_declines_triangle(self):
        with pytest.raises(OperationDeclined):
            operation_III(trivial(), 3, "root")

    @given(st.integers(4, 9), st.integers(1, 6), st.integers(0, 10))
    @settings(max_examples=30)
    def test_matches_closed_form(self, k, m, at):
        g1 = rooted_path(m, "u_1", at % m)
        cert = operation_III(g1, k)
        assert cert.delta == op3_gain(k, m) > 0
        assert cert.before.order == cert.after.order


class TestOperationIV:
    def test_k4_p2_p2(self):
        cert = operation_IV(rooted_path(2, "u_1"), rooted_path(2, "v_1"), 4)
        assert cert.delta > 0 and cert.claim_holds

    def test_k5_trivial_g1(self):
        cert = operation_IV(trivial(), rooted_path(2, "v_1"), 5, g1_root="root")
        assert cert.delta > 0

    def test_inequality_chain(self):
        for k in range(4, 9):
            for m1 in range(1, 5):
                for m2 in range(1, 5):
                    cert = operation_IV(rooted_path(m1, "u_1"), rooted_path(m2, "v_1"), k)
                    assert cert.details["gap_at_least_lower_bound"]
                    assert cert.details["delta_exceeds_lower_bound"]
                    assert cert.details["delta_exceeds_scaled_gap"]


class TestOperationV:
    def test_equal_orders(self):
        cert = operation_V(rooted_path(3, "u_1"), RootedGraph(cycle_graph(3), {"v_1": 0}), 5)
        assert cert.delta == 0 and cert.claim == WEAK and cert.claim_holds
        assert cert.details["equality_case"]

    def test_k4_1_3(self):
        cert = operation_V(trivial(), rooted_path(3, "v_1"), 4, g1_root="root")
        assert cert.delta == Fraction(8, 3) == op5_gain(4, 1, 3)

    def test_declines_larger_g1(self):
        with pytest.raises(OperationDeclined):
            operation_V(rooted_path(4, "u_1"), rooted_path(2, "v_1"), 5)

    @given(st.integers(4, 9), st.integers(1, 5), st.integers(0, 4), st.integers(0, 10))
    @settings(max_examples=30)
    def test_closed_form(self, k, m1, extra, seed):
        m2 = m1 + extra
        g2 = RootedGraph(random_cactus(m2, seed % ((m2 + 1) // 2), seed), {"v_1": seed % m2})
        cert = operation_V(rooted_path(m1, "u_1"), g2, k)
        assert cert.delta == op5_gain(k, m1, m2)
        assert (cert.delta == 0) == (m1 == m2)


def test_certificate_serialises():
    d = operation_III(rooted_path(2, "u_1"), 4).to_dict()
    assert d["op"] == "III" and d["delta"] == "19/6" and d["claim"] == STRICT


class TestDriver:
    def test_fixed_point(self):
        final, trace = canonicalize_to_extremal(build_extremal_chain((9, 3)).graph)
        assert trace == []

    def test_star_7_2(self):
        final, trace = canonicalize_to_extremal(build_minimal_star((7, 2)).graph)
        target = build_extremal_chain((7, 2)).graph
        assert canonical_certificate(final) == canonical_certificate(target)
        kfs = [kirchhoff_index(build_minimal_star((7, 2)).graph)] + [c.kf_after for c in trace]
        assert all(a < b for a, b in zip(kfs, kfs[1:]))
        assert all(c.before.order == 7 for c in trace)

    def test_random_9_3_reaches_enumeration_argmax(self):
        graphs = enumerate_cacti((9, 3))
        best = max(graphs, key=kirchhoff_index)
        final, _ = canonicalize_to_extremal(random_cactus(9, 3, 12345))
        assert canonical_certificate(final) == canonical_certificate(best)

    def test_trace_is_connected(self):
        _, trace = canonicalize_to_extremal(random_cactus(9, 2, 4))
        for a, b in zip(trace, trace[1:]):
            assert canonical_certificate(a.after) == canonical_certificate(b.before)

    @pytest.mark.slow
    def test_every_member_of_small_classes(self):
        for n, t in [(6, 2), (7, 2), (7, 3), (8, 3)]:
            target = canonical_certificate(build_extremal_chain((n, t)).graph)
            for g in enumerate_cacti((n, t)):
                final, trace = canonicalize_to_extremal(g)
                assert canonical_certificate(final) == target
                assert all(c.delta > 0 for c in trace)

    def test_rejects_small_inputs(self):
        with pytest.raises(GraphError):
            canonicalize_to_extremal(cycle_graph(5))
        with pytest.raises(GraphError):
            canonicalize_to_extremal(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))

    def test_step_budget(self):
        with pytest.raises(CanonicalizationStuck):
            canonicalize_to_extremal(build_minimal_star((9, 2)).graph, max_steps=0)
