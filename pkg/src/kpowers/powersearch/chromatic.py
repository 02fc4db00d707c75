"""Chromatic number of k-th powers of cycles."""

from __future__ import annotations

from ..graphs import Graph


def power_cycle_graph(k: int, ell: int) -> Graph:
    """C^k_ℓ on vertices 0..ℓ−1 (complete when ℓ ≤ 2k+1)."""
    edges = set()
    for i in range(ell):
        for d in range(1, k + 1):
            j = (i + d) % ell
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(ell, edges)


def power_cycle_chromatic(k: int, ell: int) -> int:
    """χ(C^k_ℓ) = ⌈ℓ / ⌊ℓ/(k+1)⌋⌉."""
    if ell < k + 1:
        raise ValueError("need ell ≥ k+1")
    return -(-ell // (ell // (k + 1)))


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over colour counts."""
    n = g.n
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: -g.degree(v))

    def colourable(c: int) -> bool:
        classes = [0] * c

        def rec(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            opened = False
            for j in range(c):
                if classes[j] == 0:
                    if opened:
                        break
                    opened = True
                if not g.adj[v] & classes[j]:
                    classes[j] |= 1 << v
                    if rec(i + 1):
                        return True
                    classes[j] &= ~(1 << v)
            return False

        return rec(0)

    c = 1
    while not colourable(c):
        c += 1
    return c


__all__ = ["chromatic_number", "power_cycle_chromatic", "power_cycle_graph"]
