"""Checkable structural facts about K_{k+1}-components at high minimum degree."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import PreconditionError
from ..graphs import Graph, iter_bits, popcount
from .decompose import CliqueComponentDecomposition

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass
class FactReport:
    k: int
    n: int
    delta: int
    results: dict[str, tuple[str, str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(status != FAIL for status, _ in self.results.values())

    def failures(self) -> list[str]:
        return [name for name, (status, _) in self.results.items() if status == FAIL]

    def lines(self) -> list[str]:
        return [f"{name}: {status} {detail}".rstrip() for name, (status, detail) in self.results.items()]


def check_component_facts(g: Graph, dec: CliqueComponentDecomposition, delta: int) -> FactReport:
    """Evaluate the four facts; failures are reported, never raised.

    component-size       every component has more than δ vertices
    exterior-no-edge     no edge joins the exteriors of two components
    link-min-degree      for every K_{k−1} f of a component C, the set
                         U = {v : f+v ∈ C} has δ(G[U]) ≥ kδ−(k−1)n and
                         |U| > kδ−(k−1)n
    interior-size        with two or more components, |int| ≥ 2δ−n+2 > 0
                         and every exterior has at most n−δ−1 vertices
    """
    k, n = dec.k, g.n
    if delta > g.min_degree() or k * delta <= (k - 1) * n:
        raise PreconditionError("need δ(g) ≥ δ > (k−1)n/k")
    rep = FactReport(k, n, delta)
    B = k * delta - (k - 1) * n

    small = [c.id for c in dec.components if c.size <= delta]
    rep.results["component-size"] = (FAIL, f"components {small}") if small else (PASS, "")

    bad = None
    comps = dec.components
    for a, b in combinations(comps, 2):
        for v in iter_bits(a.exterior):
            if g.adj[v] & b.exterior:
                bad = (a.id, b.id, v)
                break
        if bad:
            break
    rep.results["exterior-no-edge"] = (FAIL, f"components {bad[0]}, {bad[1]} at vertex {bad[2]}") if bad else (PASS, "")

    links: dict[tuple[int, tuple[int, ...]], int] = {}
    for i, cl in enumerate(dec.kcliques):
        cid = dec.component_of[i]
        for f in combinations(cl, k - 1):
            rest = next(iter(set(cl) - set(f)))
            key = (cid, f)
            links[key] = links.get(key, 0) | 1 << rest
    worst = None
    for (cid, f), U in links.items():
        size = popcount(U)
        mind = min(popcount(g.adj[v] & U) for v in iter_bits(U))
        if mind < B or size < B + 1:
            worst = (cid, f, mind, size)
            break
    if worst:
        rep.results["link-min-degree"] = (FAIL, f"component {worst[0]}, f={worst[1]}: δ(U)={worst[2]}, |U|={worst[3]}")
    else:
        rep.results["link-min-degree"] = (PASS, f"{len(links)} links")

    if len(comps) < 2 or k < 2:
        rep.results["interior-size"] = (NA, "needs at least two components")
    else:
        intr = popcount(dec.interior)
        big = [c.id for c in comps if popcount(c.exterior) > n - delta - 1]
        if intr < 2 * delta - n + 2 or 2 * delta - n + 2 <= 0 or big:
            rep.results["interior-size"] = (FAIL, f"|int|={intr}, oversized exteriors {big}")
        else:
            rep.results["interior-size"] = (PASS, f"|int|={intr} ≥ {2 * delta - n + 2}")
    return rep
