"""Maximum matchings, general (blossom) and bipartite (augmenting paths)."""

from __future__ import annotations

from collections import deque

from ..errors import PreconditionError
from .bits import VertexLike, as_mask, iter_bits, popcount
from .core import Graph

Matching = list[tuple[int, int]]


def maximum_matching(g: Graph, within: VertexLike | None = None) -> Matching:
    """Edmonds' blossom algorithm on the subgraph induced by ``within``."""
    allowed = g.vertex_mask if within is None else as_mask(within)
    n = g.n
    nbrs = [list(iter_bits(g.adj[v] & allowed)) if allowed >> v & 1 else [] for v in range(n)]
    match = [-1] * n

    # greedy start, lowest index first
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def find_path(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while q:
            v = q.popleft()
            for u in nbrs[v]:
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] != -1 and parent[match[u]] != -1):
                    cur = lca(v, u)
                    blossom = [False] * n
                    mark(v, cur, u, blossom)
                    mark(u, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[u] == -1:
                    parent[u] = v
                    if match[u] == -1:
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u], match[pv] = pv, u
                            u = nxt
                        return True
                    used[match[u]] = True
                    q.append(match[u])
        return False

    for v in range(n):
        if match[v] == -1 and nbrs[v]:
            find_path(v)
    return [(v, match[v]) for v in range(n) if match[v] > v]


def min_degree_matching(g: Graph) -> Matching:
    """Maximum matching; it always has at least min(δ, ⌊n/2⌋) edges."""
    m = maximum_matching(g)
    assert len(m) >= min(g.min_degree(), g.n // 2)
    return m


def maximum_bipartite_matching(g: Graph, U: VertexLike, V: VertexLike) -> Matching:
    """Augmenting-path matching using only U–V edges, pairs returned as (u, v)."""
    um, vm = as_mask(U), as_mask(V)
    if um & vm:
        raise PreconditionError("U and V must be disjoint")
    left = list(iter_bits(um))
    mate: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in iter_bits(g.adj[u] & vm):
            if v in seen:
                continue
            seen.add(v)
            if v not in mate or augment(mate[v], seen):
                mate[v] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return sorted((u, v) for v, u in mate.items())


def bipartite_min_degree_matching(g: Graph, U: VertexLike, V: VertexLike, u: int, v: int) -> Matching:
    """Matching of size ≥ min(u + v, |U|, |V|) given the stated degree floors."""
    um, vm = as_mask(U), as_mask(V)
    for x in iter_bits(um):
        if popcount(g.adj[x] & vm) < u:
            raise PreconditionError(f"vertex {x} of U has fewer than {u} neighbours in V")
    for y in iter_bits(vm):
        if popcount(g.adj[y] & um) < v:
            raise PreconditionError(f"vertex {y} of V has fewer than {v} neighbours in U")
    m = maximum_bipartite_matching(g, um, vm)
    assert len(m) >= min(u + v, popcount(um), popcount(vm))
    return m


def is_matching(g: Graph, m: Matching) -> bool:
    seen = 0
    for a, b in m:
        if not g.has_edge(a, b) or seen >> a & 1 or seen >> b & 1:
            return False
        seen |= 1 << a | 1 << b
    return True
