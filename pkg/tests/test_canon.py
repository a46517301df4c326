import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import cacti, connected_graphs
from kflab.canon import (
    CanonicalizationLimitError,
    canonical_certificate,
    canonical_form,
    canonical_labelling,
    is_isomorphic,
)
from kflab.graph import Graph, cycle_graph, path_graph

PAW = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
STAR4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def shuffled(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_p4_relabelled_same_certificate():
    assert canonical_certificate(path_graph(4)) == canonical_certificate(path_graph(4).relabel([2, 0, 3, 1]))


def test_p4_vs_star():
    assert canonical_certificate(path_graph(4)) != canonical_certificate(STAR4)


def test_paw_all_relabellings_agree():
    certs = {canonical_certificate(PAW.relabel(list(p))) for p in itertools.permutations(range(4))}
    assert len(certs) == 1


def test_labelling_is_a_permutation_producing_the_form():
    g = shuffled(cycle_graph(7), random.Random(1))
    perm = canonical_labelling(g)
    assert sorted(perm) == list(range(7))
    assert g.relabel(perm) == canonical_form(g)


@given(connected_graphs(nmax=10))
@settings(max_examples=60)
def test_invariant_under_relabelling(g):
    rng = random.Random(g.order * 1000 + g.size)
    assert canonical_certificate(shuffled(g, rng)) == canonical_certificate(g)


@given(connected_graphs(nmax=8), connected_graphs(nmax=8))
@settings(max_examples=80)
def test_agrees_with_networkx_isomorphism(g, h):
    ref = nx.is_isomorphic(nx.Graph(list(g.edges())) if g.size else nx.empty_graph(g.order),
                           nx.Graph(list(h.edges())) if h.size else nx.empty_graph(h.order))
    if g.order != h.order:
        ref = False
    assert is_isomorphic(g, h) == ref


@given(cacti(nmax=14))
@settings(max_examples=40)
def test_cactus_certificates_stable(g):
    assert canonical_form(canonical_form(g)) == canonical_form(g)


def test_classes_on_five_vertices_match_atlas():
    # every labelled graph on 5 vertices, reduced to isomorphism classes
    pairs = list(itertools.combinations(range(5), 2))
    certs = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        certs.add(canonical_certificate(Graph.from_edges(5, edges)))
    assert len(certs) == 34


def test_highly_symmetric_graphs_are_fast():
    star = Graph.from_edges(12, [(0, i) for i in range(1, 12)])
    assert canonical_certificate(shuffled(star, random.Random(3))) == canonical_certificate(star)
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert canonical_certificate(shuffled(k33, random.Random(4))) == canonical_certificate(k33)


def test_limit_raises():
    with pytest.raises(CanonicalizationLimitError):
        canonical_certificate(path_graph(20))
    assert canonical_certificate(path_graph(20), limit=20)


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv("KFLAB_CANON_LIMIT", "4")
    with pytest.raises(CanonicalizationLimitError):
        canonical_certificate(path_graph(5))
