import json
import random

import pytest
from hypothesis import given, strategies as st

from kpowers.errors import PreconditionError
from kpowers.extremal import build_G_p
from kpowers.graphs import Graph, from_graph6, to_graph6
from kpowers.harness import (
    CampaignConfig,
    VerificationRecord,
    canonical_form,
    chi_lengths,
    enumerate_small_graphs,
    facts_campaign,
    figure1_data,
    figure1_rows,
    probe_campaign,
    probe_theorem,
    records_csv,
    records_json,
    run_cells,
    sample_min_degree_graphs,
    stability_probe,
    tightness_campaign,
    verify_tightness,
)
from kpowers.powersearch import power_cycle_chromatic
from kpowers.thresholds import PowerParams, compute_profile
from oracles import count_graphs_brute, to_nx

import networkx as nx


def test_config_and_record_shape():
    with pytest.raises(ValueError):
        CampaignConfig((3, 2), (5, 6))
    with pytest.raises(ValueError):
        CampaignConfig((2, 2), (5, 6), seed=-1)
    with pytest.raises(ValueError):
        VerificationRecord({"k": 2}, "random", "P^k_pp", "counterexample-at-small-n")
    with pytest.raises(ValueError):
        VerificationRecord({"k": 2}, "G_p", "x", "maybe")
    r = VerificationRecord({"k": 2, "n": 5, "delta": 3}, "K_n graph6=D~{", "P^k_pp", "pass")
    assert r.graph6 == "D~{"
    lines = records_csv([r]).splitlines()
    assert lines[0] == "k,n,delta,graph,claim,outcome,witness,gap" and len(lines) == 2
    assert json.loads(records_json([r]))[0]["outcome"] == "pass"


def test_run_cells_keeps_order():
    cells = list(range(20))
    assert run_cells(abs, cells, workers=1) == run_cells(abs, cells, workers=3) == cells


def test_sample_min_degree_examples():
    gs = list(sample_min_degree_graphs(12, 7, 100, 5))
    assert len(gs) == 100 and all(g.min_degree() >= 7 for g in gs)
    again = list(sample_min_degree_graphs(12, 7, 100, 5))
    assert [to_graph6(g) for g in gs] == [to_graph6(g) for g in again]
    assert all(g == Graph.complete(9) for g in sample_min_degree_graphs(9, 8, 5, 1))
    assert list(sample_min_degree_graphs(9, 4, 0, 1)) == []
    with pytest.raises(ValueError):
        list(sample_min_degree_graphs(5, 5, 1, 0))


@given(st.integers(2, 14), st.data(), st.integers(0, 2**64 - 1))
def test_sample_min_degree_property(n, data, seed):
    d = data.draw(st.integers(0, n - 1))
    for g in sample_min_degree_graphs(n, d, 3, seed):
        assert g.n == n and g.min_degree() >= d


def test_enumerate_counts_match_brute():
    assert [sum(1 for _ in enumerate_small_graphs(n)) for n in range(1, 7)] == [
        count_graphs_brute(n, 0) for n in range(1, 7)
    ]
    for n, d in [(4, 2), (5, 2), (6, 3)]:
        assert sum(1 for _ in enumerate_small_graphs(n, d)) == count_graphs_brute(n, d)


def test_enumerate_examples():
    assert [sum(1 for _ in enumerate_small_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert sum(1 for _ in enumerate_small_graphs(4, 2)) == 3
    assert [g.num_edges() for g in enumerate_small_graphs(3, 2)] == [3]
    assert list(enumerate_small_graphs(5, 4)) == [Graph.complete(5)]
    with pytest.raises(ValueError):
        next(enumerate_small_graphs(9))


def test_enumerate_classes_are_distinct():
    gs = [to_nx(g) for g in enumerate_small_graphs(5, 1)]
    for i, a in enumerate(gs):
        assert not any(nx.is_isomorphic(a, b) for b in gs[i + 1:])


@given(st.integers(1, 8), st.integers(0, 2**32))
def test_canonical_form_invariant_under_relabelling(n, seed):
    rnd = random.Random(seed)
    g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.5])
    perm = list(range(n))
    rnd.shuffle(perm)
    assert canonical_form(g)[0] == canonical_form(g.relabel(perm))[0]


def test_figure1_examples():
    rows = figure1_rows(2, 12)
    assert len(rows) == 2
    k, n = 3, 200
    rows = figure1_rows(k, n)
    for d, pp, pc, guess in rows:
        prof = compute_profile(PowerParams(k, n, d))
        assert (pp, pc, guess) == (prof.pp, prof.pc, (k + 1) * (k * d - (k - 1) * n))
        if k * d - (k - 1) * n == 1:
            assert guess == k + 1
    # staircase: pp is non-decreasing, creeps by at most k+1 while r_p is fixed and leaps where r_p drops
    rp = [compute_profile(PowerParams(k, n, d)).r_p for d, *_ in rows]
    steps = [(b[1] - a[1], ra != rb) for a, b, ra, rb in zip(rows, rows[1:], rp, rp[1:])]
    assert all(inc >= 0 for inc, _ in steps)
    assert all(inc <= k + 1 for inc, moved in steps if not moved)
    assert max(steps)[1] and sum(moved for _, moved in steps) >= 5
    assert figure1_data(2, 12).splitlines()[0] == "delta,pp,pc,guess"
    with pytest.raises(ValueError):
        figure1_rows(3, 4)


def test_chi_lengths():
    assert chi_lengths(2, 3, 12) == [ell for ell in range(3, 13) if ell != 5]
    assert all(power_cycle_chromatic(3, ell) <= 5 for ell in chi_lengths(3, 4, 40))


@pytest.mark.parametrize("k,n,d", [(3, 20, 14), (2, 12, 7), (2, 9, 6)])
def test_verify_tightness_examples(k, n, d):
    r = verify_tightness(k, n, d)
    assert r.outcome == "pass", r
    if (k, n, d) == (2, 9, 6):
        assert r.extra["pp"] == n


def test_verify_tightness_budget():
    assert verify_tightness(3, 20, 14, budget=3).outcome == "budget"


def test_tightness_campaign_replayable():
    cfg = CampaignConfig((2, 2), (5, 11))
    a = tightness_campaign(cfg)
    assert records_csv(a) == records_csv(tightness_campaign(CampaignConfig((2, 2), (5, 11), workers=2)))
    assert all(r.outcome == "pass" for r in a)


def test_probe_examples():
    recs = probe_theorem(2, [8, 9, 10], samples=4, seed=3)
    by = {}
    for r in recs:
        by.setdefault(r.graph.split()[0], []).append(r)
        assert r.graph6 is not None
    assert all(r.outcome == "pass" for name in ("G_p", "G_c", "K_n") for r in by[name])
    for r in recs:
        if r.outcome == "counterexample-at-small-n":
            g = from_graph6(r.graph6)
            assert g.min_degree() >= r.params["delta"]


def test_probe_campaign_replayable():
    cfg = CampaignConfig((2, 3), (6, 10), samples=3, seed=11)
    a = probe_campaign(cfg)
    b = probe_campaign(CampaignConfig((2, 3), (6, 10), samples=3, seed=11, workers=2))
    assert records_json(a) == records_json(b)
    c = probe_campaign(CampaignConfig((2, 3), (6, 10), samples=3, seed=12))
    assert records_json(a) != records_json(c)


def test_facts_campaign_passes():
    recs = facts_campaign(CampaignConfig((2, 3), (7, 11), samples=5, seed=2))
    assert recs and all(r.outcome == "pass" for r in recs)


def test_stability_examples():
    g, _ = build_G_p(PowerParams(3, 20, 14))
    rep = stability_probe(3, g)
    assert "C3-like" in rep.holds
    assert rep.interior_parts == [6, 6] and rep.pieces == [4, 4] and rep.ck == 8
    assert "C1" in stability_probe(3, Graph.complete(12)).holds
    with pytest.raises(PreconditionError):
        stability_probe(3, g, delta=13)


def test_stability_glued_components():
    # two K_4's sharing an independent interior of three vertices joined to both
    edges = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    edges += [(a, b) for a in range(4, 8) for b in range(a + 1, 8)]
    edges += [(i, x) for i in range(8, 11) for x in range(8)]
    g = Graph.from_edges(11, edges)
    rep = stability_probe(2, g)
    assert rep.components == 2 and rep.interior == 3
    assert rep.exterior_sizes == [4, 4] and rep.interior_parts == [3]
    assert rep.pieces == [4, 4] and rep.pieces_connected
    assert "C3-like" in rep.holds and rep.lines()
