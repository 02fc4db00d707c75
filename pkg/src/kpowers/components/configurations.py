"""Search for the dangling-clique configurations around a central K_k.

A configuration with parameters 1 ≤ j < ℓ ≤ k is a K_k  T = u_1..u_k in a
component C together with

* a K_k of another component through u_1..u_j and u_{ℓ+1}..u_k, and
* for every j < p ≤ ℓ, a K_k of another component through u_p and
  u_{ℓ+1}..u_k.

Every vertex of T then lies in two components, so only K_k's inside the
interior need to be tried.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import PreconditionError, ResourceLimit
from ..graphs import Graph
from ..graphs.cliques import iter_cliques
from .decompose import CliqueComponentDecomposition

DEFAULT_CONFIG_BUDGET = 10_000_000


@dataclass(frozen=True)
class ConfigurationWitness:
    j: int
    ell: int
    k: int
    u: tuple[int, ...]
    v: tuple[int, ...]
    w: tuple[tuple[int, ...], ...]
    component_id: int

    def verify(self, g: Graph, dec: CliqueComponentDecomposition) -> bool:
        j, ell, k = self.j, self.ell, self.k
        if not 1 <= j < ell <= k or len(self.u) != k or len(self.v) != ell - j or len(self.w) != ell - j:
            return False
        u = self.u
        tail = u[ell:]

        def kk(vs: tuple[int, ...]) -> int | None:
            if len(set(vs)) != k or not g.is_clique(sum(1 << x for x in vs)):
                return None
            return dec.component_of_clique(vs)

        c = self.component_id
        if kk(u) != c:
            return False
        other = kk(u[:j] + self.v + tail)
        if other is None or other == c:
            return False
        for p, row in zip(range(j, ell), self.w):
            if len(row) != ell - 1:
                return False
            other = kk((u[p],) + row + tail)
            if other is None or other == c:
                return False
        return True


def _subset_components(dec: CliqueComponentDecomposition, sizes: set[int]) -> dict[tuple[int, ...], dict[int, tuple[int, ...]]]:
    """For each vertex subset of the given sizes: component id → one K_k through it."""
    out: dict[tuple[int, ...], dict[int, tuple[int, ...]]] = {}
    for i, cl in enumerate(dec.kcliques):
        cid = dec.component_of[i]
        for s in sizes:
            for sub in combinations(cl, s):
                out.setdefault(sub, {}).setdefault(cid, cl)
    return out


def _elsewhere(table: dict, sub: tuple[int, ...], c: int) -> tuple[int, ...] | None:
    for cid, cl in table.get(tuple(sorted(sub)), {}).items():
        if cid != c:
            return cl
    return None


def detect_configuration(
    g: Graph,
    dec: CliqueComponentDecomposition,
    j: int,
    ell: int,
    budget: int | None = None,
) -> ConfigurationWitness | None:
    """First configuration found in lexicographic order of the central K_k, or None."""
    k = dec.k
    if not 1 <= j < ell <= k:
        raise PreconditionError("need 1 ≤ j < ℓ ≤ k")
    if len(dec.components) < 2:
        return None
    limit = DEFAULT_CONFIG_BUDGET if budget is None else budget
    table = _subset_components(dec, {k - ell + j, k - ell + 1})
    checks = 0
    for T in iter_cliques(g, k, dec.interior):
        c = dec.component_of_clique(T)
        assert c is not None
        for common in combinations(T, k - ell):
            rest = [x for x in T if x not in common]
            for shared in combinations(rest, j):
                checks += 1
                if checks > limit:
                    raise ResourceLimit(f"configuration search passed {limit} checks")
                R = [x for x in rest if x not in shared]
                adj = _elsewhere(table, shared + common, c)
                if adj is None:
                    continue
                rows = []
                for p in R:
                    hang = _elsewhere(table, (p,) + common, c)
                    if hang is None:
                        break
                    rows.append(tuple(x for x in hang if x != p and x not in common))
                else:
                    v = tuple(x for x in adj if x not in shared and x not in common)
                    wit = ConfigurationWitness(j, ell, k, tuple(shared) + tuple(R) + common, v, tuple(rows), c)
                    assert wit.verify(g, dec)
                    return wit
    return None
