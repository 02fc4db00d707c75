import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kpowers.components import (
    ck_factor_exact,
    ck_value,
    check_component_facts,
    clique_free_component_factor,
    decompose,
    detect_configuration,
)
from kpowers.components.factors import greedy_packing
from kpowers.errors import BudgetExceeded, PreconditionError, ResourceLimit
from kpowers.extremal import build_balanced_multipartite, build_G_c, build_G_p
from kpowers.graphs import Graph, disjoint_cliques_graph, members, popcount
from kpowers.harness import sample_min_degree_graphs
from kpowers.thresholds import PowerParams
from oracles import ck_brute, clique_components, interior_exterior


@st.composite
def graphs(draw, nmin=1, nmax=9):
    n = draw(st.integers(nmin, nmax))
    p = draw(st.floats(0.4, 1.0))
    rnd = random.Random(draw(st.integers(0, 2**32)))
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rnd.random() < p])


def gp(k, n, d):
    return build_G_p(PowerParams(k, n, d))


def three_triangles():
    return Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (1, 5), (5, 6), (1, 6)])


def test_decompose_examples():
    dec = decompose(Graph.complete(5), 3)
    assert len(dec.components) == 1 and dec.interior == 0
    g = disjoint_cliques_graph([4, 4])
    dec = decompose(g, 3)
    assert len(dec.components) == 2 and dec.interior == 0
    assert sorted(c.exterior for c in dec.components) == [0x0F, 0xF0]
    g, lay = gp(3, 20, 14)
    dec = decompose(g, 3)
    assert len(dec.components) == 2
    assert dec.interior == lay.interior and popcount(dec.interior) == 12
    assert sorted(c.exterior for c in dec.components) == sorted(lay.cliques)


def test_decompose_resource_limit():
    with pytest.raises(ResourceLimit):
        decompose(Graph.complete(10), 3, max_cliques=50)


@given(graphs(), st.integers(1, 3))
def test_decompose_matches_networkx_oracle(g, k):
    dec = decompose(g, k)
    ref = clique_components(g, k)
    got = [{frozenset(dec.kcliques[i]) for i in c.kcliques} for c in dec.components]
    assert sorted(map(sorted, map(lambda s: [tuple(sorted(x)) for x in s], got))) == sorted(
        map(sorted, map(lambda s: [tuple(sorted(x)) for x in s], ref))
    )
    intr, exts = interior_exterior(g, k)
    assert set(members(dec.interior)) == intr
    assert sorted(map(sorted, map(set, (members(c.exterior) for c in dec.components)))) == sorted(map(sorted, exts))


@given(graphs(), st.integers(1, 3))
def test_interior_and_exteriors_partition_covered(g, k):
    dec = decompose(g, k)
    parts = [dec.interior] + [c.exterior for c in dec.components]
    union = 0
    for p in parts:
        assert not union & p
        union |= p
    assert union == dec.covered


def test_ck_examples():
    g = Graph.complete(8)
    dec = decompose(g, 3)
    f = ck_factor_exact(g, dec, 0)
    assert len(f) == 2 and f.size == 8 and f.validate(g, dec)
    g, lay = gp(3, 20, 14)
    dec = decompose(g, 3)
    cid = next(c.id for c in dec.components if c.exterior == lay.cliques[0])
    f = ck_factor_exact(g, dec, cid)
    assert f.size == 8
    for c in f.cliques:
        assert popcount(sum(1 << v for v in c) & lay.cliques[0]) == 2
    g, lay = gp(2, 12, 7)
    dec = decompose(g, 2)
    cid = next(c.id for c in dec.components if c.exterior == lay.cliques[0])
    assert ck_factor_exact(g, dec, cid).size == 6


def test_ck_budget():
    g, _ = gp(3, 20, 14)
    dec = decompose(g, 3)
    with pytest.raises(BudgetExceeded) as e:
        ck_factor_exact(g, dec, 0, budget=0)
    best = e.value.best
    assert best.validate(g, dec) and best.audit == (("optimal", False),)


@given(graphs(nmax=9), st.integers(1, 3))
def test_ck_matches_brute(g, k):
    assert ck_value(g, k) == ck_brute(g, k)


@given(graphs(nmax=10), st.integers(1, 3))
def test_greedy_packing_is_valid_and_below_exact(g, k):
    dec = decompose(g, k)
    for c in dec.components:
        f = greedy_packing(g, dec, c.id)
        assert f.validate(g, dec)
        assert f.size <= ck_factor_exact(g, dec, c.id).size


@pytest.mark.parametrize("k,n,d", [(2, 9, 6), (3, 20, 14), (2, 20, 12), (3, 13, 9), (4, 25, 20), (4, 21, 16)])
def test_clique_free_factor_on_balanced_multipartite(k, n, d):
    g = build_balanced_multipartite(k, n, d)
    dec = decompose(g, k)
    assert len(dec.components) == 1
    f = clique_free_component_factor(g, dec, 0)
    assert f.validate(g, dec)
    assert g.min_degree() == d
    assert f.size >= (k + 1) * (k * d - (k - 1) * n)


def test_clique_free_factor_rejects_big_clique():
    g = Graph.complete(6)
    with pytest.raises(PreconditionError):
        clique_free_component_factor(g, decompose(g, 3), 0)


def test_configuration_examples():
    for k in (2, 3):
        g = Graph.complete(k + 2)
        dec = decompose(g, k)
        for j in range(1, k):
            for ell in range(j + 1, k + 1):
                assert detect_configuration(g, dec, j, ell) is None
    g = three_triangles()
    dec = decompose(g, 2)
    w = detect_configuration(g, dec, 1, 2)
    assert w is not None and w.verify(g, dec)
    g, _ = gp(2, 12, 7)
    assert detect_configuration(g, decompose(g, 2), 1, 2) is None


def _brute_configuration(g, k, j, ell):
    """Try each ordered K_k u against all choices of v and w, using the component map directly."""
    dec = decompose(g, k)
    comp = {frozenset(c): dec.component_of[i] for i, c in enumerate(dec.kcliques)}
    verts = range(g.n)

    def kk(vs):
        return comp.get(frozenset(vs)) if len(set(vs)) == len(vs) else None

    for cl in dec.kcliques:
        for order in __import__("itertools").permutations(cl):
            c = comp[frozenset(order)]
            tail = order[ell:]
            ok = False
            for v in combinations(verts, ell - j):
                x = kk(order[:j] + v + tail)
                if x is not None and x != c:
                    ok = True
                    break
            if not ok:
                continue
            if all(
                any(
                    (lambda x: x is not None and x != c)(kk((order[p],) + w + tail))
                    for w in combinations(verts, ell - 1)
                )
                for p in range(j, ell)
            ):
                return True
    return False


@given(graphs(nmin=3, nmax=8), st.sampled_from([(2, 1, 2), (3, 1, 2), (3, 2, 3), (3, 1, 3)]))
def test_configuration_matches_brute(g, case):
    k, j, ell = case
    dec = decompose(g, k)
    w = detect_configuration(g, dec, j, ell)
    assert (w is not None) == _brute_configuration(g, k, j, ell)
    if w is not None:
        assert w.verify(g, dec)


def test_facts_examples():
    for k, n, d in [(3, 20, 14), (2, 12, 7)]:
        for build in (build_G_p, build_G_c):
            g, _ = build(PowerParams(k, n, d))
            rep = check_component_facts(g, decompose(g, k), d)
            assert rep.ok, rep.lines()
            if build is build_G_p:
                assert rep.results["interior-size"][0] == "pass"
    g = Graph.complete(7)
    rep = check_component_facts(g, decompose(g, 3), 6)
    assert rep.ok and rep.results["interior-size"][0] == "n/a"
    with pytest.raises(PreconditionError):
        check_component_facts(g, decompose(g, 3), 4)


@given(st.sampled_from([(2, 9), (2, 12), (3, 10), (3, 14), (4, 13)]), st.integers(0, 2**32))
def test_facts_hold_on_random_graphs(kn, seed):
    k, n = kn
    d = (k - 1) * n // k + 1
    for g in sample_min_degree_graphs(n, d, 5, seed):
        rep = check_component_facts(g, decompose(g, k), g.min_degree())
        assert rep.ok, rep.lines()


@pytest.mark.parametrize("k,n,d", [(2, 8, 5), (3, 11, 8), (4, 14, 11)])
def test_single_component_extremal_has_empty_interior(k, n, d):
    # r_p = 1: one component, so no vertex is shared and the I_j are not interior
    g, lay = gp(k, n, d)
    dec = decompose(g, k)
    assert len(dec.components) == 1 and dec.interior == 0
    assert all(s for s in lay.independent_sets)
