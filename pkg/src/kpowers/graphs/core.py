"""Immutable simple graph on vertices 0..n-1 with bitset adjacency rows."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from ..errors import PreconditionError
from .bits import VertexLike, as_mask, iter_bits, popcount


class Graph:
    """Simple undirected graph.

    ``adj[v]`` is an int whose set bits are the neighbours of ``v``.  Rows are
    checked for symmetry and the absence of loops on construction, so every
    ``Graph`` that exists is a valid simple graph.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]) -> None:
        if n < 0 or len(adj) != n:
            raise PreconditionError("adjacency must have exactly n rows")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise PreconditionError(f"row {v} names a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise PreconditionError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise PreconditionError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adj = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    # basic queries

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def common_neighbors(self, vs: VertexLike) -> int:
        m = self.vertex_mask
        for v in iter_bits(as_mask(vs)):
            m &= self.adj[v]
        return m

    def is_clique(self, vs: VertexLike) -> bool:
        m = as_mask(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in iter_bits(m))

    def is_independent(self, vs: VertexLike) -> bool:
        m = as_mask(vs)
        return all(self.adj[v] & m == 0 for v in iter_bits(m))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.vertex_mask

    def connected_components(self, within: int | None = None) -> list[int]:
        """Vertex masks of the connected components of the induced subgraph."""
        rest = self.vertex_mask if within is None else within
        comps = []
        while rest:
            seen = frontier = rest & -rest
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            comps.append(seen)
            rest &= ~seen
        return comps

    # derived graphs

    def induced(self, vs: VertexLike) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled 0..m-1, plus the list old-index-by-new-index."""
        keep = list(iter_bits(as_mask(vs)))
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in iter_bits(self.adj[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(keep), rows), keep

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, [full & ~r & ~(1 << v) for v, r in enumerate(self.adj)])

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, rows)

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        rows = [0] * self.n
        for v, r in enumerate(self.adj):
            nr = 0
            for u in iter_bits(r):
                nr |= 1 << perm[u]
            rows[perm[v]] = nr
        return Graph(self.n, rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def disjoint_cliques_graph(sizes: Sequence[int]) -> Graph:
    """Disjoint union of cliques of the given sizes, numbered consecutively."""
    n = sum(sizes)
    edges = []
    start = 0
    for s in sizes:
        edges.extend(combinations(range(start, start + s), 2))
        start += s
    return Graph.from_edges(n, edges)
