"""Independent reference implementations used only by the tests.

These are deliberately naive: plain Python sets, itertools and networkx,
no bit tricks, no pruning beyond what keeps them finite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

import networkx as nx

from kpowers.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def scan_profile(k: int, n: int, d: int) -> dict[str, int]:
    """r, s, pp, pc by scanning every r in 1..n with Fractions."""
    A = (k - 1) * d - (k - 2) * n
    B = k * d - (k - 1) * n
    rp = max(r for r in range(1, n + 1) if Fraction(A, r).__floor__() > B)
    rc = max(r for r in range(1, n + 1) if Fraction(A, r).__ceil__() > B)
    sp = Fraction(A, rp).__ceil__()
    sc = Fraction(A, rc).__ceil__()
    return {
        "r_p": rp, "r_c": rc, "s_p": sp, "s_c": sc,
        "pp": min((k - 1) * (sp // 2 + 1) + sp, n),
        "pc": min((k - 1) * (sc // 2) + sc, n),
    }


def r_inequalities(k: int, n: int, d: int, r: int) -> bool:
    B = k * d - (k - 1) * n
    first = Fraction(n - d - 1, B + 1) < r <= Fraction((k - 1) * d - (k - 2) * n, B + 1)
    lo = Fraction(((k - 1) * r + 1) * n - (r + 1), k * r + 1)
    hi = Fraction(((k - 1) * (r - 1) + 1) * n - r, k * (r - 1) + 1)
    return first and lo < d <= hi


def cliques_of(h: nx.Graph, size: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in combinations(sorted(h), size) if all(h.has_edge(a, b) for a, b in combinations(c, 2))]


def clique_components(g: Graph, k: int) -> list[set[frozenset[int]]]:
    """K_{k+1}-components as sets of K_k's, via a networkx graph on the K_k's."""
    h = to_nx(g)
    kk = cliques_of(h, k)
    aux = nx.Graph()
    aux.add_nodes_from(kk)
    for big in cliques_of(h, k + 1):
        subs = [frozenset(s) for s in combinations(sorted(big), k)]
        aux.add_edges_from(zip(subs, subs[1:]))
    return [set(c) for c in nx.connected_components(aux)]


def interior_exterior(g: Graph, k: int) -> tuple[set[int], list[set[int]]]:
    comps = clique_components(g, k)
    vsets = [set().union(*c) for c in comps]
    count: dict[int, int] = {}
    for vs in vsets:
        for v in vs:
            count[v] = count.get(v, 0) + 1
    intr = {v for v, c in count.items() if c > 1}
    return intr, [vs - intr for vs in vsets]


def ck_brute(g: Graph, k: int) -> int:
    """Max connected K_{k+1}-factor size by trying every disjoint family per component."""
    h = to_nx(g)
    comps = clique_components(g, k)
    where = {}
    for i, c in enumerate(comps):
        for s in c:
            where[s] = i
    big = cliques_of(h, k + 1)
    best = 0
    for i in range(len(comps)):
        mine = [b for b in big if where[frozenset(sorted(b)[:k])] == i]

        def rec(start: int, used: set[int], count: int) -> None:
            nonlocal best
            best = max(best, count * (k + 1))
            for j in range(start, len(mine)):
                if not mine[j] & used:
                    rec(j + 1, used | mine[j], count + 1)

        rec(0, set(), 0)
    return best


def is_power_path(h: nx.Graph, seq: list[int], k: int) -> bool:
    if len(set(seq)) != len(seq):
        return False
    return all(h.has_edge(seq[i], seq[j]) for i in range(len(seq)) for j in range(i + 1, min(i + k + 1, len(seq))))


def longest_power_path_naive(g: Graph, k: int) -> int:
    """Try orderings prefix by prefix; a prefix that is not a power path is dropped."""
    h = to_nx(g)
    n = g.n
    best = 0
    stack: list[list[int]] = [[]]
    while stack:
        seq = stack.pop()
        best = max(best, len(seq))
        if best == n:
            break
        for v in range(n):
            if v in seq:
                continue
            if all(h.has_edge(v, w) for w in seq[-k:]):
                stack.append(seq + [v])
    return best


def has_power_cycle_naive(g: Graph, k: int, ell: int) -> bool:
    h = to_nx(g)
    for sub in combinations(range(g.n), ell):
        first = sub[0]
        for rest in permutations(sub[1:]):
            cyc = (first,) + rest
            if all(h.has_edge(cyc[i], cyc[(i + d) % ell]) for i in range(ell) for d in range(1, k + 1) if (i + d) % ell != i):
                return True
    return False


def chromatic_brute(h: nx.Graph) -> int:
    nodes = sorted(h, key=lambda v: -h.degree(v))
    for c in range(1, len(nodes) + 1):
        col: dict[int, int] = {}

        def ok(i: int) -> bool:
            if i == len(nodes):
                return True
            v = nodes[i]
            used = {col[u] for u in h[v] if u in col}
            for x in range(min(c, max(col.values(), default=-1) + 2)):
                if x not in used:
                    col[v] = x
                    if ok(i + 1):
                        return True
                    del col[v]
            return False

        if ok(0):
            return c
    return 0


def count_graphs_brute(n: int, min_degree: int) -> int:
    """Non-isomorphic graphs with δ ≥ min_degree, by isomorphism tests over all labelled graphs."""
    pairs = list(combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        if n and min(d for _, d in h.degree()) < min_degree:
            continue
        if not any(nx.faster_could_be_isomorphic(h, r) and nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return len(reps)
