import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kpowers.errors import BudgetExceeded, HypothesisViolation, InsertionFailure, PreconditionError
from kpowers.extremal import build_G_c, build_G_p
from kpowers.graphs import Graph, members
from kpowers.powersearch import (
    PowerCycleWitness,
    PowerPathWitness,
    check_spread,
    chromatic_number,
    dirac_hamilton_cycle,
    find_power_cycle,
    find_power_path,
    is_hamilton_cycle,
    is_power_cycle,
    is_power_path,
    longest_power_path_exact,
    naive_longest_power_path,
    path_cycle_avoiding_bad,
    power_cycle_chromatic,
    power_cycle_graph,
    power_step_up,
    twin_classes,
)
from kpowers.thresholds import PowerParams
from hosts import dirac_graph, planted_host
from oracles import chromatic_brute, has_power_cycle_naive, longest_power_path_naive, to_nx


@st.composite
def graphs(draw, nmin=0, nmax=8):
    n = draw(st.integers(nmin, nmax))
    pairs = list(combinations(range(n), 2))
    p = draw(st.floats(0.3, 1.0))
    rnd = random.Random(draw(st.integers(0, 2**32)))
    return Graph.from_edges(n, [e for e in pairs if rnd.random() < p])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_witness_validation():
    g = Graph.complete(4)
    assert is_power_path(g, [0, 1, 2, 3], 3)
    assert not is_power_path(g, [0, 0], 1)
    assert not is_power_path(cycle(5), [0, 1, 2], 2)
    assert is_power_cycle(cycle(5), [0, 1, 2, 3, 4], 1)
    assert not is_power_cycle(cycle(5), [0, 2, 1, 3, 4], 1)


def test_longest_examples():
    assert len(longest_power_path_exact(Graph.complete(6), 3)) == 6
    assert len(longest_power_path_exact(cycle(6), 2)) == 2
    g, _ = build_G_p(PowerParams(3, 20, 14))
    w = longest_power_path_exact(g, 3)
    assert len(w) == 10 and w.validate(g)


def test_budget_carries_best():
    g, _ = build_G_p(PowerParams(3, 20, 14))
    with pytest.raises(BudgetExceeded) as e:
        longest_power_path_exact(g, 3, budget=5)
    best = e.value.best
    assert best is not None and not best.optimal and best.validate(g)


@given(graphs(nmax=8), st.integers(1, 3))
def test_exact_matches_naive_oracle(g, k):
    w = longest_power_path_exact(g, k)
    assert w.validate(g)
    assert len(w) == longest_power_path_naive(g, k) == naive_longest_power_path(g, k)


@given(graphs(nmax=8), st.integers(1, 3), st.integers(1, 8))
def test_find_power_path_consistent(g, k, ell):
    w = find_power_path(g, k, ell)
    best = longest_power_path_naive(g, k)
    if ell <= best:
        assert w is not None and len(w) == ell and w.validate(g)
    else:
        assert w is None


@given(graphs(nmin=3, nmax=7), st.integers(1, 2), st.data())
def test_find_power_cycle_matches_brute(g, k, data):
    ell = data.draw(st.integers(k + 1, max(k + 1, g.n)))
    w = find_power_cycle(g, k, ell)
    assert (w is not None) == has_power_cycle_naive(g, k, ell)
    if w is not None:
        assert len(w) == ell and w.validate(g)


def test_power_cycle_examples():
    w = find_power_cycle(Graph.complete(5), 3, 5)
    assert w is not None and len(w) == 5
    g, _ = build_G_c(PowerParams(2, 12, 7))
    assert find_power_cycle(g, 2, 3) is not None
    # pc_2(12,7) = 4; C^2_5 = K_5 is not in G_c, and neither are 6 and 7
    assert find_power_cycle(g, 2, 4) is not None
    for ell in (5, 6, 7):
        assert find_power_cycle(g, 2, ell) is None
    with pytest.raises(ValueError):
        find_power_cycle(g, 2, 2)


@given(graphs(nmax=10))
def test_twin_classes_are_twins(g):
    cls = twin_classes(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if cls[u] == cls[v]:
                open_twins = g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)
                assert open_twins


def test_chromatic_examples():
    assert power_cycle_chromatic(2, 5) == 5
    assert power_cycle_chromatic(2, 6) == 3
    assert power_cycle_chromatic(3, 8) == 4
    assert chromatic_number(power_cycle_graph(2, 6)) == 3
    assert chromatic_number(power_cycle_graph(3, 8)) == 4
    with pytest.raises(ValueError):
        power_cycle_chromatic(3, 3)


@given(st.integers(1, 3), st.integers(2, 14))
def test_chromatic_formula_matches_brute(k, extra):
    ell = k + 1 + extra
    assert power_cycle_chromatic(k, ell) == chromatic_brute(to_nx(power_cycle_graph(k, ell)))


@given(graphs(nmax=9))
def test_chromatic_number_matches_brute(g):
    assert chromatic_number(g) == chromatic_brute(to_nx(g))


def test_step_up_complete_host():
    g = Graph.complete(9)
    base = PowerCycleWitness(1, (0, 1, 2, 3, 4, 5))
    with pytest.raises(InsertionFailure):
        power_step_up(g, base, {6, 7})
    base = PowerCycleWitness(1, (0, 1, 2, 3, 4, 5))
    out = power_step_up(g, base, {6, 7, 8})
    assert isinstance(out, PowerCycleWitness) and out.k == 2 and len(out) == 9 and out.validate(g)


def test_step_up_extremal_layer():
    g, lay = build_G_p(PowerParams(3, 20, 14))
    x = members(lay.cliques[0])
    i1 = members(lay.independent_sets[0])
    sq = PowerPathWitness(2, (i1[0], x[0], x[1], i1[1], x[2], x[3], i1[2]))
    assert sq.validate(g)
    cube = power_step_up(g, sq, lay.independent_sets[1])
    assert cube.k == 3 and cube.validate(g) and len(cube) == 10


def test_step_up_rejects():
    g = Graph.complete(6)
    with pytest.raises(ValueError):
        power_step_up(g, PowerPathWitness(1, (0, 1)), {1, 2})
    with pytest.raises(InsertionFailure):
        power_step_up(g, PowerPathWitness(1, (0, 1, 2, 3, 4)), {5})


@given(st.integers(4, 14), st.integers(1, 3), st.integers(0, 2**32))
def test_step_up_in_complete_hosts(m, h, seed):
    # a complete host always has enough insertion vertices
    blocks = m // (h + 1) + 1
    g = Graph.complete(m + blocks)
    order = list(range(m))
    random.Random(seed).shuffle(order)
    out = power_step_up(g, PowerPathWitness(h, tuple(order)), set(range(m, m + blocks)))
    assert out.k == h + 1 and len(out) == m + blocks and out.validate(g)


def test_dirac_examples():
    c4 = cycle(4)
    cyc = dirac_hamilton_cycle(c4)
    assert is_hamilton_cycle(c4, cyc)
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert is_hamilton_cycle(k33, dirac_hamilton_cycle(k33))
    with pytest.raises(PreconditionError):
        dirac_hamilton_cycle(cycle(5))


@given(st.integers(3, 40), st.integers(0, 2**32))
def test_dirac_random(n, seed):
    g = dirac_graph(n, random.Random(seed))
    cyc = dirac_hamilton_cycle(g)
    assert is_hamilton_cycle(g, cyc)
    h = to_nx(g)
    assert sorted(cyc) == list(range(n))
    assert all(h.has_edge(cyc[i - 1], cyc[i]) for i in range(n))


def test_bad_vertex_examples():
    g = Graph.complete(12)
    cyc = path_cycle_avoiding_bad(g, set(), "cycle", 7)
    assert len(cyc) == 7 and check_spread(g, cyc, 0, cyclic=True)
    with pytest.raises(HypothesisViolation):
        path_cycle_avoiding_bad(Graph.complete(9), set(), "cycle", 5)


def test_bad_vertex_planted_300():
    rng = random.Random(300)
    g, bad = planted_host(300, 2, rng)
    bm = sum(1 << b for b in bad)
    cyc = path_cycle_avoiding_bad(g, bad, "cycle", 150)
    assert len(cyc) == 150 and check_spread(g, cyc, bm, cyclic=True)


def test_bad_vertex_hamilton_gadget():
    rng = random.Random(7)
    g, bad = planted_host(120, 1, rng)
    bm = 1 << bad[0]
    cyc = path_cycle_avoiding_bad(g, bad, "cycle", g.n)
    assert sorted(cyc) == list(range(g.n)) and check_spread(g, cyc, bm, cyclic=True)
    x, y = [v for v in range(g.n) if v != bad[0]][:2]
    path = path_cycle_avoiding_bad(g, bad, "path", g.n, x, y)
    assert path[0] == x and path[-1] == y and len(path) == g.n
    assert check_spread(g, path, bm | 1 << x | 1 << y, cyclic=False)


def test_bad_vertex_path_rejects_bad_ends():
    rng = random.Random(1)
    g, bad = planted_host(100, 1, rng)
    with pytest.raises(HypothesisViolation):
        path_cycle_avoiding_bad(g, bad, "path", 20, bad[0], (bad[0] + 1) % 100)
    with pytest.raises(PreconditionError):
        path_cycle_avoiding_bad(g, bad, "path", 20, 3, 3)
