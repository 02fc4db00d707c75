"""Equitable colourings and partiteness checks."""

from __future__ import annotations

from collections import deque

import networkx as nx

from ..errors import PreconditionError
from .bits import iter_bits, lowest, popcount
from .core import Graph

EXACT_LIMIT = 14


def _greedy_classes(g: Graph, r: int) -> list[int]:
    classes = [0] * r
    for v in range(g.n):
        for c in sorted(range(r), key=lambda c: (popcount(classes[c]), c)):
            if not g.adj[v] & classes[c]:
                classes[c] |= 1 << v
                break
        else:
            raise PreconditionError(f"greedy colouring with {r} colours failed at vertex {v}")
    return classes


def _rebalance(g: Graph, classes: list[int]) -> bool:
    """Shift vertices along chains of classes until sizes differ by at most one.

    A class X points to Y when some vertex of X has no neighbour in Y.  A
    path from a largest to a smallest class lets one vertex move along every
    arc, shrinking the head and growing the tail by one.  Returns False when
    no such path remains and the colouring is still unbalanced.
    """
    r = len(classes)
    while True:
        sizes = [popcount(c) for c in classes]
        big, small = max(sizes), min(sizes)
        if big - small <= 1:
            return True
        sources = [c for c in range(r) if sizes[c] == big]
        targets = {c for c in range(r) if sizes[c] == small}
        prev: dict[int, tuple[int, int]] = {}
        q = deque(sources)
        seen = set(sources)
        hit = -1
        while q and hit < 0:
            x = q.popleft()
            for y in range(r):
                if y in seen:
                    continue
                movers = [v for v in iter_bits(classes[x]) if not g.adj[v] & classes[y]]
                if movers:
                    prev[y] = (x, movers[0])
                    seen.add(y)
                    if y in targets:
                        hit = y
                        break
                    q.append(y)
        if hit < 0:
            return False
        # move from the tail backwards so each witness stays valid
        y = hit
        while y in prev:
            x, v = prev[y]
            classes[x] &= ~(1 << v)
            classes[y] |= 1 << v
            y = x


def _exact_equitable(g: Graph, r: int) -> list[int] | None:
    n = g.n
    lo, extra = divmod(n, r)
    classes = [0] * r
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def fits(c: int) -> bool:
        big = sum(1 for x in classes if popcount(x) > lo)
        size = popcount(classes[c])
        if size < lo:
            return True
        return size == lo and big < extra

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        tried_empty = False
        for c in range(r):
            if classes[c] == 0:
                if tried_empty:
                    continue
                tried_empty = True
            if g.adj[v] & classes[c] or not fits(c):
                continue
            classes[c] |= 1 << v
            if rec(i + 1):
                return True
            classes[c] &= ~(1 << v)
        return False

    return classes if rec(0) else None


def equitable_coloring(g: Graph, r: int) -> list[int]:
    """Proper r-colouring with class sizes ⌈n/r⌉ or ⌊n/r⌋; requires r > Δ(g).

    Classes are bitmasks, sorted by decreasing size then by least vertex.
    """
    if r <= g.max_degree() or r < 1:
        raise PreconditionError(f"need r > Δ(g) = {g.max_degree()}, got r = {r}")
    classes = _greedy_classes(g, r)
    if not _rebalance(g, classes):
        if g.n <= EXACT_LIMIT:
            classes = _exact_equitable(g, r)
            assert classes is not None
        else:
            nxg = nx.Graph()
            nxg.add_nodes_from(range(g.n))
            nxg.add_edges_from(g.edges())
            colour = nx.equitable_color(nxg, r)
            classes = [0] * r
            for v, c in colour.items():
                classes[c] |= 1 << v
    classes.sort(key=lambda c: (-popcount(c), lowest(c) if c else g.n))
    return classes


def partiteness_certificate(g: Graph, parts: int) -> list[int] | None:
    """Partition into ``parts`` independent sets, or None when none exists."""
    n = g.n
    if parts < 1:
        return None if n else []
    classes = [0] * parts
    # saturation-first order keeps the tree small
    order: list[int] = []
    placed = 0
    while len(order) < n:
        best, key = -1, None
        for v in range(n):
            if placed >> v & 1:
                continue
            k = (popcount(g.adj[v] & placed), g.degree(v), -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed |= 1 << best

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        tried_empty = False
        for c in range(parts):
            if classes[c] == 0:
                if tried_empty:
                    continue
                tried_empty = True
            if g.adj[v] & classes[c]:
                continue
            classes[c] |= 1 << v
            if rec(i + 1):
                return True
            classes[c] &= ~(1 << v)
        return False

    if not rec(0):
        if parts >= 2:
            from .cliques import clique_number

            k = parts + 1
            guaranteed = clique_number(g) < k and g.min_degree() * (3 * k - 4) > (3 * k - 7) * n
            assert not guaranteed, "K_k-free graph above the partiteness threshold must be (k-1)-partite"
        return None
    out = [c for c in classes if c]
    out.sort(key=lowest)
    out.extend([0] * (parts - len(out)))
    return out
