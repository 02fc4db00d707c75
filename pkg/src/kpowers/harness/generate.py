"""Graph generators: seeded random graphs with a minimum degree, and all small graphs."""

from __future__ import annotations

import random
from typing import Iterator

from ..graphs import Graph, iter_bits, popcount

MAX_ENUM_N = 8


def sample_min_degree_graphs(
    n: int, delta: int, count: int, seed: int, p: float | None = None
) -> Iterator[Graph]:
    """``count`` random graphs with δ ≥ delta, reproducible from ``seed``.

    Each graph starts as G(n, p) with p = delta/(n−1) unless given; then,
    while some vertex has degree below delta, the least such vertex of
    minimum degree gets an edge to a uniformly chosen non-neighbour.
    """
    if not 0 <= delta <= n - 1:
        raise ValueError("need 0 ≤ δ ≤ n−1")
    rng = random.Random(seed)
    prob = delta / (n - 1) if p is None else p
    full = (1 << n) - 1
    for _ in range(count):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < prob:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        while True:
            degs = [popcount(a) for a in adj]
            low = min(degs)
            if low >= delta:
                break
            v = degs.index(low)
            choices = list(iter_bits(full & ~adj[v] & ~(1 << v)))
            u = rng.choice(choices)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        yield Graph(n, adj)


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(popcount(g.adj[v] & m) for m in masks) for v in c}
            for key in sorted(set(sig.values())):
                out.append([v for v in c if sig[v] == key])
        if len(out) == len(cells):
            return out
        cells = out


def _code(g: Graph, order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = len(order)
    code = 0
    for i, v in enumerate(order):
        for u in iter_bits(g.adj[v]):
            j = pos[u]
            if j > i:
                code |= 1 << (i * n + j)
    return code


def canonical_form(g: Graph) -> tuple[int, list[int]]:
    """Largest upper-triangle code over all refinement-consistent orderings.

    Cells come from iterated degree refinement, which any isomorphism
    respects; the first non-singleton cell is split by individualising each
    of its vertices in turn.  Returns (code, ordering achieving it).
    """
    if g.n == 0:
        return 0, []
    best: tuple[int, list[int]] | None = None

    def rec(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(g, cells)
        i = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if i is None:
            order = [c[0] for c in cells]
            code = _code(g, order)
            if best is None or code > best[0]:
                best = (code, order)
            return
        for v in cells[i]:
            rest = [u for u in cells[i] if u != v]
            rec(cells[:i] + [[v], rest] + cells[i + 1:])

    rec([list(range(g.n))])
    assert best is not None
    return best


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def enumerate_small_graphs(n: int, min_degree: int = 0) -> Iterator[Graph]:
    """Every graph on n ≤ 8 vertices with δ ≥ min_degree, once per isomorphism class.

    Graphs are grown one vertex at a time.  An m-vertex induced subgraph of
    a target has δ ≥ min_degree − (n − m), so smaller levels are pruned to
    that.  Each level keeps one canonical representative per class, and the
    output comes in increasing order of canonical code.
    """
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration is limited to n ≤ {MAX_ENUM_N}")
    if n <= 0:
        if n == 0 and min_degree <= 0:
            yield Graph(0, [])
        return
    level: dict[int, Graph] = {0: Graph(1, [0])}
    for m in range(2, n + 1):
        floor = min_degree - (n - m)
        nxt: dict[int, Graph] = {}
        for h in level.values():
            for nb in range(1 << (m - 1)):
                adj = list(h.adj) + [nb]
                for u in iter_bits(nb):
                    adj[u] |= 1 << (m - 1)
                if min(popcount(a) for a in adj) < floor:
                    continue
                cand = Graph(m, adj)
                code, _ = canonical_form(cand)
                if code not in nxt:
                    nxt[code] = canonical_graph(cand)
        level = nxt
    for code in sorted(level):
        g = level[code]
        if g.min_degree() >= min_degree:
            yield g
