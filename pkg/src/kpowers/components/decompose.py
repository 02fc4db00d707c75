"""K_{k+1}-components: K_k copies glued along shared K_{k+1}'s."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import ResourceLimit
from ..graphs import Graph, iter_bits, popcount
from ..graphs.cliques import iter_cliques

DEFAULT_MAX_CLIQUES = 2_000_000


class UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


@dataclass
class Component:
    id: int
    vertices: int
    exterior: int
    kcliques: list[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return popcount(self.vertices)


@dataclass
class CliqueComponentDecomposition:
    k: int
    n: int
    kcliques: list[tuple[int, ...]]
    component_of: list[int]
    components: list[Component]
    interior: int
    index: dict[tuple[int, ...], int]
    kplus1: list[tuple[int, ...]]
    kplus1_component: list[int]

    def component_of_clique(self, clique: tuple[int, ...] | list[int]) -> int | None:
        """Component id of a K_k given as vertices, or None if it is not a K_k of the graph."""
        i = self.index.get(tuple(sorted(clique)))
        return None if i is None else self.component_of[i]

    @property
    def covered(self) -> int:
        m = 0
        for c in self.components:
            m |= c.vertices
        return m

    def total_exterior(self, cid: int) -> int:
        return self.components[cid].exterior


def decompose(g: Graph, k: int, max_cliques: int = DEFAULT_MAX_CLIQUES) -> CliqueComponentDecomposition:
    """Union-find over the K_k's, uniting the k+1 facets of every K_{k+1}.

    Components are numbered in order of their least K_k (lexicographic on
    sorted vertex tuples), so ids are stable across runs.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    kcl: list[tuple[int, ...]] = []
    for c in iter_cliques(g, k):
        kcl.append(c)
        if len(kcl) > max_cliques:
            raise ResourceLimit(f"more than {max_cliques} copies of K_{k}")
    index = {c: i for i, c in enumerate(kcl)}
    uf = UnionFind(len(kcl))
    big: list[tuple[int, ...]] = []
    for c in iter_cliques(g, k + 1):
        big.append(c)
        if len(big) > max_cliques:
            raise ResourceLimit(f"more than {max_cliques} copies of K_{k + 1}")
        facets = [index[f] for f in combinations(c, k)]
        for f in facets[1:]:
            uf.union(facets[0], f)
    root_id: dict[int, int] = {}
    comp_of = []
    for i in range(len(kcl)):
        r = uf.find(i)
        if r not in root_id:
            root_id[r] = len(root_id)
        comp_of.append(root_id[r])
    comps = [Component(i, 0, 0) for i in range(len(root_id))]
    for i, c in enumerate(kcl):
        comp = comps[comp_of[i]]
        comp.kcliques.append(i)
        for v in c:
            comp.vertices |= 1 << v
    # a vertex is interior when it lies in two or more components
    seen = 0
    interior = 0
    for comp in comps:
        interior |= seen & comp.vertices
        seen |= comp.vertices
    for comp in comps:
        comp.exterior = comp.vertices & ~interior
    big_comp = [comp_of[index[c[:k]]] for c in big]
    return CliqueComponentDecomposition(k, g.n, kcl, comp_of, comps, interior, index, big, big_comp)


def components_containing(dec: CliqueComponentDecomposition, v: int) -> list[int]:
    return [c.id for c in dec.components if c.vertices >> v & 1]


def exterior_vertices(dec: CliqueComponentDecomposition) -> int:
    m = 0
    for c in dec.components:
        m |= c.exterior
    return m


def vertices_in(mask: int) -> list[int]:
    return list(iter_bits(mask))
