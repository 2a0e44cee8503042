import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from regwitness.enumeration import (
    canonical_form,
    canonical_key,
    count_connected,
    enumerate_connected,
    enumerate_upto,
    is_isomorphic,
    refine,
)
from regwitness.graph import GraphError, from_graph6, relabel, to_graph6
from regwitness.invariants import clique_report, lip

from helpers import from_nx, graphs, to_nx

CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


@pytest.fixture(scope="module")
def atlas_by_n():
    out = {}
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() and nx.is_connected(H):
            out.setdefault(H.number_of_nodes(), []).append(from_nx(H))
    return out


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert count_connected(n) == CONNECTED_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_same_classes_as_graph_atlas(n, atlas_by_n):
    ours = {canonical_key(G) for G in enumerate_connected(n)}
    theirs = {canonical_key(G) for G in atlas_by_n[n]}
    assert ours == theirs


@pytest.mark.parametrize("n", range(1, 8))
def test_graph6_round_trip(n):
    for G in enumerate_connected(n):
        assert from_graph6(to_graph6(G)) == G


def test_pairwise_distinct_invariant_spot_check():
    # distinct classes may share invariants, but an identical canonical form must never repeat
    seen = set()
    for G in enumerate_connected(6):
        vec = (tuple(sorted(G.degrees())), clique_report(G).clique_count, clique_report(G).clique_number, lip(G))
        key = (vec, canonical_key(G))
        assert key not in seen
        seen.add(key)
    assert len(seen) == 112


def test_order_is_stable():
    a = [to_graph6(G) for G in enumerate_connected(5)]
    b = [to_graph6(G) for G in enumerate_connected(5)]
    assert a == b
    edges = [G.num_edges for G in enumerate_connected(5)]
    assert edges == sorted(edges)


def test_range_checks():
    with pytest.raises(GraphError):
        list(enumerate_connected(8))
    with pytest.raises(GraphError):
        list(enumerate_connected(0))
    assert sum(1 for _ in enumerate_upto(4)) == 1 + 1 + 2 + 6


@given(graphs(min_n=1, max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabeling_invariant(G, rnd):
    perm = list(range(1, G.n + 1))
    rnd.shuffle(perm)
    H = relabel(G, perm)
    assert canonical_form(G) == canonical_form(H)
    assert is_isomorphic(G, H)
    assert nx.is_isomorphic(to_nx(canonical_form(G)), to_nx(G))


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_isomorphism_agrees_with_networkx(G, H):
    assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_refine_cells_partition_vertices():
    G = from_graph6("D?{")  # a star K_{1,4}
    cells = refine(G)
    assert sorted(v for c in cells for v in c) == list(range(G.n))
    assert sorted(len(c) for c in cells) == [1, 4]
