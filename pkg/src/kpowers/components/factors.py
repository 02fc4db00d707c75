"""Connected K_{k+1}-factors: an exact search and the clique-free construction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Any

from ..errors import BudgetExceeded, PreconditionError
from ..graphs import Graph, iter_bits, lowest, popcount
from .decompose import CliqueComponentDecomposition, decompose

DEFAULT_FACTOR_BUDGET = 5_000_000


@dataclass(frozen=True)
class ConnectedCliqueFactor:
    k: int
    cliques: tuple[tuple[int, ...], ...]
    component_id: int | None
    complete: bool = True
    bound: int | None = None
    audit: tuple[Any, ...] = ()

    @property
    def size(self) -> int:
        """Number of covered vertices."""
        return sum(len(c) for c in self.cliques)

    def __len__(self) -> int:
        return len(self.cliques)

    def validate(self, g: Graph, dec: CliqueComponentDecomposition) -> bool:
        """Disjoint cliques of g; when complete, K_{k+1}'s whose K_k's all sit in one component."""
        used = 0
        for c in self.cliques:
            m = sum(1 << v for v in c)
            if used & m or len(set(c)) != len(c) or not g.is_clique(m):
                return False
            used |= m
        if not self.complete:
            return True
        if not self.cliques:
            return True
        for c in self.cliques:
            if len(c) != self.k + 1:
                return False
            for f in combinations(sorted(c), self.k):
                if dec.component_of_clique(f) != self.component_id:
                    return False
        return True


def factor_component(dec: CliqueComponentDecomposition, cliques: list[tuple[int, ...]]) -> int | None:
    """Shared component of a list of K_{k+1}'s, or None if empty or mixed."""
    ids = set()
    for c in cliques:
        ids.add(dec.component_of_clique(sorted(c)[: dec.k]))
    if len(ids) != 1:
        return None
    return ids.pop()


def _greedy_colour_classes(g: Graph, vertices: int) -> list[int]:
    classes: list[int] = []
    for v in iter_bits(vertices):
        for i, c in enumerate(classes):
            if not g.adj[v] & c:
                classes[i] = c | 1 << v
                break
        else:
            classes.append(1 << v)
    return classes


def ck_factor_exact(
    g: Graph,
    dec: CliqueComponentDecomposition,
    component_id: int,
    budget: int | None = None,
) -> ConnectedCliqueFactor:
    """Maximum packing of vertex-disjoint K_{k+1}'s of one component.

    Branches on the least still-coverable vertex: either some candidate
    through it is used, or the vertex is dropped.  A K_{k+1} takes at most one
    vertex from each class of a fixed proper colouring, so t cliques fit only
    if t(k+1) ≤ Σ_c min(available in c, t); that caps each subtree.
    """
    if not 0 <= component_id < len(dec.components):
        raise PreconditionError(f"no component {component_id}")
    k = dec.k
    cands = [sum(1 << v for v in c) for c, cid in zip(dec.kplus1, dec.kplus1_component) if cid == component_id]
    by_vertex: dict[int, list[int]] = {}
    for m in cands:
        for v in iter_bits(m):
            by_vertex.setdefault(v, []).append(m)
    verts = 0
    for m in cands:
        verts |= m
    classes = _greedy_colour_classes(g, verts)
    limit = DEFAULT_FACTOR_BUDGET if budget is None else budget
    nodes = 0

    def upper(avail: int) -> int:
        sizes = [popcount(c & avail) for c in classes]
        t = popcount(avail) // (k + 1)
        while t and t * (k + 1) > sum(min(s, t) for s in sizes):
            t -= 1
        return t

    def coverable(blocked: int) -> int:
        m = 0
        for c in cands:
            if not c & blocked:
                m |= c
        return m

    # greedy lower bound: least-index first fit
    best: list[int] = []
    used = 0
    for c in cands:
        if not c & used:
            best.append(c)
            used |= c
    chosen: list[int] = []

    def rec(blocked: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > limit:
            raise BudgetExceeded(_pack(k, best, component_id, False), nodes)
        avail = coverable(blocked)
        if len(chosen) + upper(avail) <= len(best):
            return
        if not avail:
            if len(chosen) > len(best):
                best = chosen[:]
            return
        v = lowest(avail)
        for c in by_vertex[v]:
            if not c & blocked:
                chosen.append(c)
                rec(blocked | c)
                chosen.pop()
        rec(blocked | 1 << v)

    rec(0)
    out = _pack(k, best, component_id, True)
    assert out.validate(g, dec)
    return out


def _pack(k: int, masks: list[int], cid: int | None, optimal: bool) -> ConnectedCliqueFactor:
    cliques = tuple(tuple(iter_bits(m)) for m in masks)
    return ConnectedCliqueFactor(k, cliques, cid, audit=(("optimal", optimal),))


def greedy_packing(g: Graph, dec: CliqueComponentDecomposition, component_id: int) -> ConnectedCliqueFactor:
    """First-fit packing of the component's K_{k+1}'s in lexicographic order."""
    used = 0
    picked = []
    for c, cid in zip(dec.kplus1, dec.kplus1_component):
        m = sum(1 << v for v in c)
        if cid == component_id and not m & used:
            picked.append(c)
            used |= m
    return ConnectedCliqueFactor(dec.k, tuple(picked), component_id)


def ck_value(g: Graph, k: int, budget: int | None = None) -> int:
    """CK_{k+1}F(g): the largest connected factor size over all components."""
    dec = decompose(g, k)
    return max((ck_factor_exact(g, dec, c.id, budget).size for c in dec.components), default=0)


def _clique_free_rec(g: Graph, k: int, delta: int, comp: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """kδ−(k−1)n disjoint K_{k+1}'s of the K_{k+1}-free component ``comp`` (a set of K_k's)."""
    n = g.n
    want = k * delta - (k - 1) * n
    if want <= 0:
        return []
    x = min(v for f in comp for v in f)
    if k == 1:
        # comp is a connected component; a triangle-free one has Γ(x) independent
        seeds = list(iter_bits(g.adj[x]))[:want]
        taken = sum(1 << u for u in seeds)
        out = []
        for u in seeds:
            free = g.adj[u] & ~taken
            v = lowest(free)
            taken |= 1 << v
            out.append(tuple(sorted((u, v))))
        return out
    h, names = g.induced(g.adj[x])
    pos = {v: i for i, v in enumerate(names)}
    m = h.n
    dh = delta - n + m
    sub = decompose(h, k - 1)
    start = next(
        tuple(sorted(pos[v] for v in f if v != x)) for f in sorted(comp) if x in f
    )
    cid = sub.component_of_clique(start)
    inner = {sub.kcliques[i] for i, c in enumerate(sub.component_of) if c == cid}
    small = _clique_free_rec(h, k - 1, dh, inner)[:want]
    if len(small) < want:
        raise AssertionError("recursive step returned too few cliques")
    taken = 0
    lifted = []
    for f in small:
        f0 = [names[i] for i in f]
        taken |= sum(1 << v for v in f0)
        lifted.append(f0)
    out = []
    for f0 in lifted:
        free = g.common_neighbors(sum(1 << v for v in f0)) & ~taken
        v = lowest(free)
        taken |= 1 << v
        out.append(tuple(sorted(f0 + [v])))
    return out


def clique_free_component_factor(
    g: Graph, dec: CliqueComponentDecomposition, component_id: int, delta: int | None = None
) -> ConnectedCliqueFactor:
    """kδ−(k−1)n disjoint K_{k+1}'s in a component containing no K_{k+2}.

    Recurses into the neighbourhood of the least vertex x of the component:
    the K_k's of G[Γ(x)] that form K_{k+1}'s with x give a K_{k+1}-free
    component one level down, whose factor is lifted by one fresh common
    neighbour per clique.
    """
    k = dec.k
    d = g.min_degree() if delta is None else delta
    if d > g.min_degree() or k * d < (k - 1) * g.n:
        raise PreconditionError("need δ(g) ≥ δ ≥ (k−1)n/k")
    comp = dec.components[component_id]
    for c, cid in zip(dec.kplus1, dec.kplus1_component):
        if cid == component_id and popcount(g.common_neighbors(sum(1 << v for v in c))):
            raise PreconditionError("component contains a K_{k+2}")
    cl = _clique_free_rec(g, k, d, {dec.kcliques[i] for i in comp.kcliques})
    bound = (k + 1) * max(0, k * d - (k - 1) * g.n)
    out = ConnectedCliqueFactor(k, tuple(cl), component_id, bound=bound)
    assert out.validate(g, dec) and out.size >= bound
    return out
