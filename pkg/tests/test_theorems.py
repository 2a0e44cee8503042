import json

import networkx as nx
import pytest

from regwitness.enumeration import enumerate_upto
from regwitness.families import (
    CompositionSpec,
    FanSpec,
    complete,
    complete_bipartite,
    composition,
    cycle,
    fixture,
    path,
    star,
    whiskered_cycle,
)
from regwitness.graph import Graph, GraphError, disjoint_union
from regwitness.invariants import all_spine_params, classify, internal_vertices, iv
from regwitness.oracle import regularity
from regwitness.poly import BudgetExceeded
from regwitness.theorems import (
    BUDGET,
    HOLDS,
    REGISTRY,
    SKIPPED,
    THEOREM_IDS,
    VIOLATED,
    Context,
    TheoremSpec,
    append_violations,
    check,
    check_all,
    compatible_map_verify,
    decomposition_check,
    f_instance,
    fan_instance,
    psi_value,
    recursion_4_6_check,
    violation_record,
)

from helpers import from_nx


def by_id(results):
    return {bc.theorem: bc for bc in results}


def test_registry_ids():
    assert len(THEOREM_IDS) == 25
    assert {"MM_UPPER", "KUMAR_UPPER", "ETA_2", "GAMMA_M", "CM_BIP_EQ", "WHISKER_CYCLE"} <= set(THEOREM_IDS)
    for spec in REGISTRY.values():
        assert spec.kind in {"upper", "lower", "equality", "characterization"}


def test_fixture_bounds():
    res = by_id(check_all(fixture("paper_fig1"), 2))
    assert res["GAMMA_M"].bound == 11 - 3
    assert res["GAMMA_M"].verdict == HOLDS
    res = by_id(check_all(complete(4), 2))
    assert res["ETA_M"].bound == 1 and res["ETA_M"].reg == 1
    for bc in check_all(path(2), 2):
        if bc.applicable and REGISTRY[bc.theorem].kind == "upper":
            assert bc.bound >= 1 == bc.reg


def test_m2_only_theorems_skip_at_m3():
    res = by_id(check_all(path(3), 3))
    assert res["MM_UPPER"].verdict == SKIPPED
    assert res["MM_UPPER"].detail["reason"] == "only for m = 2"
    assert res["KUMAR_UPPER"].verdict == HOLDS


def test_unknown_theorem():
    with pytest.raises(KeyError):
        check(path(3), 2, "NOPE")


def test_false_bound_is_caught(monkeypatch):
    # a deliberately wrong claim: reg <= n - 3 on connected graphs
    bogus = TheoremSpec("BOGUS", "upper", "reg <= n - 3", lambda c: True, lambda c: c.n - 3)
    monkeypatch.setitem(REGISTRY, "BOGUS", bogus)
    bc = check(path(4), 2, "BOGUS")
    assert bc.verdict == VIOLATED and bc.bound == 1 and bc.reg == 3
    # an inexact oracle value may not convict an upper bound
    bc = check(path(4), 2, "BOGUS", inequality_only=True)
    assert bc.verdict == SKIPPED


def test_false_lower_and_equality_are_caught(monkeypatch):
    monkeypatch.setitem(REGISTRY, "BOGUS_LOW", TheoremSpec("BOGUS_LOW", "lower", "reg >= n", lambda c: True, lambda c: c.n))
    monkeypatch.setitem(REGISTRY, "BOGUS_EQ", TheoremSpec("BOGUS_EQ", "equality", "reg = 1", lambda c: True, lambda c: 1))
    res = by_id(check_all(cycle(5), 2, theorems=["BOGUS_LOW", "BOGUS_EQ"]))
    assert res["BOGUS_LOW"].verdict == VIOLATED
    assert res["BOGUS_EQ"].verdict == VIOLATED
    res = by_id(check_all(cycle(5), 2, theorems=["BOGUS_LOW", "BOGUS_EQ"], inequality_only=True))
    assert res["BOGUS_LOW"].verdict == SKIPPED and res["BOGUS_EQ"].verdict == SKIPPED


def test_oracle_budget_is_recorded():
    bc = check(path(6), 2, "MM_UPPER", oracle_kwargs={"max_support": 4})
    assert bc.verdict == BUDGET and bc.reg is None


def test_violation_records(tmp_path):
    bc = check(path(4), 2, "MM_UPPER")
    rec = violation_record(path(4), 2, bc)
    assert rec["graph6"] == "Ch"
    assert rec["edges"] == [(1, 2), (2, 3), (3, 4)]
    out = tmp_path / "v.jsonl"
    assert append_violations(out, []) == 0 and not out.exists()
    assert append_violations(out, [rec, rec]) == 2
    assert append_violations(out, [rec]) == 1
    lines = out.read_text().splitlines()
    assert len(lines) == 3 and json.loads(lines[0])["theorem"] == "MM_UPPER"


def test_small_sweep_has_no_violations():
    for G in enumerate_upto(5):
        for bc in check_all(G, 2):
            assert bc.verdict != VIOLATED, (G, bc)
    for G in enumerate_upto(3):
        for bc in check_all(G, 3):
            assert bc.verdict != VIOLATED, (G, bc)


def test_mm_char_biconditional():
    for n in range(2, 7):
        assert check(path(n), 2, "MM_CHAR").detail["is_path"]
        assert check(path(n), 2, "MM_CHAR").verdict == HOLDS
    bc = check(star(3), 2, "MM_CHAR")
    assert not bc.detail["is_path"] and bc.verdict == HOLDS and bc.reg <= 2


def test_trees_up_to_nine_vertices():
    count = 0
    for n in range(2, 10):
        for H in nx.nonisomorphic_trees(n):
            T = from_nx(H)
            res = by_id(check_all(T, 2, theorems=["TREE_LOWER", "CATERPILLAR_EQ", "LOBSTER_UB", "TREE_UB2", "LIP_LOWER"]))
            assert res["TREE_LOWER"].verdict == HOLDS
            assert res["TREE_LOWER"].reg == iv(T) + 1
            assert res["TREE_LOWER"].detail["contains_jewel"] is False
            assert res["CATERPILLAR_EQ"].verdict == HOLDS
            assert res["TREE_UB2"].verdict == HOLDS
            reg = res["TREE_LOWER"].reg
            # stronger reading: every longest path works as the spine
            for sp in all_spine_params(T):
                assert reg <= sp.tree_bound
                if classify(T).lobster:
                    assert reg <= sp.lobster_bound
            count += 1
    assert count == sum(1 for n in range(2, 10) for _ in nx.nonisomorphic_trees(n))


def test_gbg_excludes_stars_but_force_opens_other_classes():
    assert check(star(3), 2, "GBG_UB").verdict == SKIPPED
    assert check(complete(2), 2, "GBG_UB").verdict == SKIPPED
    bowtie = Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    assert check(bowtie, 2, "GBG_UB").verdict == HOLDS
    assert check(cycle(4), 2, "GBG_UB").verdict == SKIPPED
    forced = check(cycle(4), 2, "GBG_UB", force=True)
    assert forced.applicable and forced.verdict in (HOLDS, VIOLATED)


def test_gbg_bound_fails_on_stars():
    # why stars are excluded: C(G) + alpha - pv = k + 0 - k = 0 while reg = 2
    from regwitness.invariants import clique_report, pendant_profile

    for k in range(2, 6):
        G = star(k)
        prof = pendant_profile(G)
        assert clique_report(G).clique_count + prof.alpha - prof.pv < regularity(G).reg


def test_whiskered_cycles():
    bc = check(whiskered_cycle(5, {1: 1, 3: 1}), 2, "WHISKER_CYCLE")
    assert bc.verdict == HOLDS and bc.bound == 5
    # triangles fall outside the characterization (two adjacent whiskers give 3, not 2)
    G = whiskered_cycle(3, {1: 1, 2: 1})
    assert check(G, 2, "WHISKER_CYCLE").verdict == SKIPPED
    assert regularity(G).reg == 3


def test_kbipartite_and_kmkn():
    assert check(complete_bipartite(2, 3), 2, "KBIPARTITE_EQ").verdict == HOLDS
    assert check(complete_bipartite(1, 1), 2, "KBIPARTITE_EQ").verdict == SKIPPED
    bc = check(complete(3), 3, "KMKN_EQ")
    assert bc.verdict == HOLDS and bc.reg == 2


def test_composition_check_requires_data():
    G = composition([3, 3])
    assert check(G, 2, "CM_BIP_EQ").verdict == SKIPPED
    bc = check(G, 2, "CM_BIP_EQ", composition=CompositionSpec((3, 3)))
    assert bc.verdict == HOLDS and bc.bound == bc.reg == 6


# -- compatible maps ---------------------------------------------------------------


def test_compatible_map_examples():
    rep = compatible_map_verify("NC", 2, path(4))
    assert rep["passes"] and rep["c"]["witness"] in internal_vertices(path(4))
    rep = compatible_map_verify("ETA", 2, fixture("paper_fig3_H"))
    assert rep["passes"] and rep["c"]["alternative"] == 1
    G = disjoint_union(complete(3), complete(2))
    rep = compatible_map_verify("GAMMA", 2, G)
    assert rep["psi"] == 2 and rep["b"]["rhs"] == 2 and rep["b"]["holds"]
    assert rep["c"] == {"applies": False}


def test_compatible_map_nc_takes_second_alternative():
    rep = compatible_map_verify("NC", 2, path(3))
    assert rep["c"]["alternative"] == 2


def test_compatible_maps_small_exhaustive():
    for G in enumerate_upto(5):
        for m in (2, 3):
            for psi in ("NC", "ETA", "GAMMA"):
                assert compatible_map_verify(psi, m, G)["passes"]


def test_psi_values():
    assert psi_value("NC", Graph.empty(0), 2) == 0
    assert psi_value("GAMMA", fixture("paper_fig1"), 2) == 8
    with pytest.raises(KeyError):
        psi_value("XX", path(3), 2)
    with pytest.raises(ValueError):
        compatible_map_verify("NC", 1, path(3))


# -- decompositions ------------------------------------------------------------------------


@pytest.mark.parametrize("G,m,v", [(path(3), 2, 2), (star(3), 2, 1), (path(3), 3, 2), (cycle(4), 2, 1)])
def test_decomposition_examples(G, m, v):
    assert decomposition_check(G, m, v)


def test_decomposition_preconditions():
    with pytest.raises(GraphError):
        decomposition_check(path(3), 2, 1)
    with pytest.raises(BudgetExceeded):
        decomposition_check(path(7), 2, 2)


# -- the composition recursion ---------------------------------------------------------------


def test_recursion_oracle_mode():
    bc = recursion_4_6_check(f_instance([3], 3))
    assert bc.detail["mode"] == "oracle" and bc.verdict == HOLDS
    assert bc.reg == 6


def test_recursion_fan_instance():
    inst = fan_instance([3], FanSpec(3, ((1, 2),), ((2, 3),)))
    bc = recursion_4_6_check(inst)
    assert bc.verdict in (HOLDS, BUDGET)
    assert bc.verdict == HOLDS or bc.detail["reason"] == "too large"


def test_recursion_formula_mode():
    bc = recursion_4_6_check(f_instance([3, 4, 3, 3], 3))
    assert bc.detail["mode"] == "formula"
    assert bc.reg == 13 and bc.verdict == HOLDS
    with pytest.raises(GraphError):
        f_instance([3], 2)
