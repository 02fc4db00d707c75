"""Common neighbourhoods and clique enumeration/extension."""

from __future__ import annotations

from typing import Iterator

from ..errors import ExtensionFailure, PreconditionError
from .bits import VertexLike, as_mask, iter_bits, lowest, members, popcount
from .coloring import equitable_coloring
from .core import Graph


def common_neighborhood(g: Graph, S: VertexLike, U: VertexLike | None = None) -> int:
    """⋂_{v∈S} Γ(v) ∩ U as a mask; U defaults to the whole vertex set."""
    s = as_mask(S)
    if not s:
        raise PreconditionError("S must be non-empty")
    u = g.vertex_mask if U is None else as_mask(U)
    out = g.common_neighbors(s) & u
    if __debug__:
        floor = sum(popcount(g.adj[v] & u) for v in iter_bits(s)) - (popcount(s) - 1) * popcount(u)
        assert popcount(out) >= floor
    return out


def extend_clique(g: Graph, clique: VertexLike, target: int, avoid: int = 0) -> int:
    """Grow ``clique`` to ``target`` vertices, taking the least common neighbour each time."""
    c = as_mask(clique)
    if not g.is_clique(c):
        raise PreconditionError("input is not a clique")
    while popcount(c) < target:
        cand = g.common_neighbors(c) & ~avoid if c else g.vertex_mask & ~avoid
        if not cand:
            raise ExtensionFailure(f"size {popcount(c)}", tuple(members(c)))
        c |= cand & -cand
    return c


def iter_cliques(g: Graph, size: int, within: VertexLike | None = None) -> Iterator[tuple[int, ...]]:
    """All cliques of exactly ``size`` vertices inside ``within``, as sorted tuples."""
    allowed = g.vertex_mask if within is None else as_mask(within)
    if size <= 0:
        yield ()
        return

    def rec(prefix: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == size:
            yield prefix
            return
        need = size - len(prefix)
        while cand and popcount(cand) >= need:
            v = lowest(cand)
            cand &= cand - 1
            yield from rec(prefix + (v,), cand & g.adj[v])

    yield from rec((), allowed)


def clique_number(g: Graph, within: VertexLike | None = None) -> int:
    """Size of a largest clique, by a simple colour-bounded branch and bound."""
    allowed = g.vertex_mask if within is None else as_mask(within)
    best = 0

    def bound(cand: int) -> int:
        # greedy colouring of the candidates caps the clique size
        colours = 0
        rest = cand
        while rest:
            colours += 1
            free = rest
            while free:
                v = lowest(free)
                rest &= ~(1 << v)
                free &= ~(1 << v) & ~g.adj[v]
        return colours

    def rec(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bound(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = lowest(cand)
            cand &= cand - 1
            rec(size + 1, cand & g.adj[v])

    rec(0, allowed)
    return best


def disjoint_cliques(g: Graph, k: int) -> list[int]:
    """Vertex-disjoint K_{k+1} copies read off an equitable colouring of the complement.

    Requires n ≥ k(k+1) and δ ≥ (k−1)n/k; returns at least
    min(kδ−(k−1)n, ⌊n/(k+1)⌋) cliques.
    """
    n, delta = g.n, g.min_degree()
    if k < 1 or n < k * (k + 1) or k * delta < (k - 1) * n:
        raise PreconditionError("need n ≥ k(k+1) and δ ≥ (k−1)n/k")
    if delta * (k + 1) <= k * n:
        r = n - delta
    else:
        r = n // (k + 1)
    classes = equitable_coloring(g.complement(), r)
    out = []
    for c in classes:
        if popcount(c) >= k + 1:
            out.append(as_mask(members(c)[: k + 1]))
    assert len(out) >= min(k * delta - (k - 1) * n, n // (k + 1))
    assert all(g.is_clique(c) for c in out)
    return out
