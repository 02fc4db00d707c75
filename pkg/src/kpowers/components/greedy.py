"""Greedy builders for connected K_{k+1}-factors.

Each builder checks the structural hypotheses that make its size guarantee
hold, raising HypothesisViolation with a short clause name when one fails:

    partition     the classes do not partition V(G)
    min-degree    δ(G) ≤ (k−1)n/k
    disjoint      U_1 and V_1 meet
    no-edge       an edge joins U_1 to U_2 (or V_1 to V_2)
    connected     the relevant K_k's lie in more than one component
    size          some X_i (or X') has more than n−δ vertices
    independent   some slice X_i ∩ Γ(g) spans an edge

Under verified hypotheses an extension that finds no vertex is a bug and
raises ExtensionFailure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence

from ..errors import ExtensionFailure, HypothesisViolation, PreconditionError
from ..graphs import Graph, iter_bits, lowest, members, popcount
from ..graphs.cliques import iter_cliques
from ..graphs.matching import Matching, maximum_bipartite_matching, min_degree_matching
from .decompose import CliqueComponentDecomposition, decompose
from .factors import ConnectedCliqueFactor, factor_component


@dataclass(frozen=True)
class Partition:
    """Classes U_1, U_2, X_1..X_{k−1}, A as vertex masks."""

    U1: int
    U2: int
    X: tuple[int, ...]
    A: int = 0

    def classes(self) -> list[int]:
        return [self.U1, self.U2, *self.X, self.A]


@dataclass(frozen=True)
class SecondPartition:
    """Classes V_1, V_2, X', A'; X_1..X_{k−2} are shared with the first partition."""

    V1: int
    V2: int
    Xp: int = 0
    Ap: int = 0


def _mask(vs: Sequence[int]) -> int:
    return sum(1 << v for v in vs)


def _check_partition(g: Graph, classes: list[int], what: str) -> None:
    seen = 0
    for c in classes:
        if c & seen:
            raise HypothesisViolation("partition", f"{what}: classes overlap")
        seen |= c
    if seen != g.vertex_mask:
        raise HypothesisViolation("partition", f"{what}: classes miss vertices {members(g.vertex_mask & ~seen)}")


def _check_min_degree(g: Graph, k: int) -> int:
    d = g.min_degree()
    if k * d <= (k - 1) * g.n:
        raise HypothesisViolation("min-degree", f"δ = {d} ≤ {(k - 1) * g.n}/{k}")
    return d


def _check_no_edge(g: Graph, a: int, b: int, names: str) -> None:
    for v in iter_bits(a):
        if g.adj[v] & b:
            raise HypothesisViolation("no-edge", f"{names}: edge at vertex {v}")


def _check_seeds(g: Graph, seeds: Sequence[tuple[int, ...]], inside: int, size: int, what: str) -> None:
    used = 0
    for s in seeds:
        m = _mask(s)
        if len(s) != size or popcount(m) != size or not g.is_clique(m):
            raise PreconditionError(f"{what}: {s} is not a K_{size}")
        if m & ~inside or m & used:
            raise PreconditionError(f"{what}: seeds must be disjoint and inside their class")
        used |= m


def _side_cliques(g: Graph, side: int, layers: int, order: int) -> list[tuple[int, ...]]:
    """Cliques of the given order in side ∪ layers having at least two vertices in side."""
    return [c for c in iter_cliques(g, order, side | layers) if popcount(_mask(c) & side) >= 2]


def _components_of(dec: CliqueComponentDecomposition, cliques: list[tuple[int, ...]]) -> set[int]:
    out = set()
    for c in cliques:
        cid = dec.component_of_clique(c)
        assert cid is not None
        out.add(cid)
    return out


def _check_slices(g: Graph, k: int, sides: list[int], X: tuple[int, ...]) -> None:
    # Γ shrinks as g grows, so cliques of order max(i, 2) are the binding ones
    for i in range(1, k - 1):
        layers = 0
        for h in range(i - 1):
            layers |= X[h]
        for side in sides:
            if not side:
                continue
            for c in _side_cliques(g, side, layers, max(i, 2)):
                sl = g.common_neighbors(_mask(c)) & X[i - 1]
                if not g.is_independent(sl):
                    raise HypothesisViolation("independent", f"X_{i} ∩ Γ{c} spans an edge")


def verify_parallel_hypotheses(
    g: Graph,
    k: int,
    P: Partition,
    Q: SecondPartition,
    dec: CliqueComponentDecomposition | None = None,
) -> int | None:
    """Check every hypothesis of the two-partition procedure; returns the shared component id."""
    if len(P.X) != k - 1:
        raise PreconditionError(f"need {k - 1} sets X_i, got {len(P.X)}")
    shared = P.X[: k - 2]
    _check_partition(g, P.classes(), "first partition")
    _check_partition(g, [Q.V1, Q.V2, *shared, Q.Xp, Q.Ap], "second partition")
    d = _check_min_degree(g, k)
    if P.U1 & Q.V1:
        raise HypothesisViolation("disjoint", "U_1 ∩ V_1 ≠ ∅")
    _check_no_edge(g, P.U1, P.U2, "U_1–U_2")
    _check_no_edge(g, Q.V1, Q.V2, "V_1–V_2")
    w = g.n - d
    for i, x in enumerate(P.X, start=1):
        if popcount(x) > w:
            raise HypothesisViolation("size", f"|X_{i}| = {popcount(x)} > n−δ = {w}")
    if popcount(Q.Xp) > w:
        raise HypothesisViolation("size", f"|X'| = {popcount(Q.Xp)} > n−δ = {w}")
    dec = dec or decompose(g, k)
    layers = 0
    for x in shared:
        layers |= x
    cl = _side_cliques(g, P.U1, layers, k)
    if Q.V1:
        cl += _side_cliques(g, Q.V1, layers, k)
    ids = _components_of(dec, cl)
    if len(ids) > 1:
        raise HypothesisViolation("connected", f"K_k's spread over components {sorted(ids)}")
    _check_slices(g, k, [P.U1, Q.V1], P.X)
    return ids.pop() if ids else None


def parallel_caps(
    g: Graph, k: int, P: Partition, Q: SecondPartition, nu: int, nv: int, b: int, c: int, d1: int, d2: int
) -> tuple[int, int, dict[str, Fraction]]:
    """Truncation sizes for the two seed families and the quantities behind them."""
    n, d = g.n, g.min_degree()
    B = k * d - (k - 1) * n
    u1, u2, a = popcount(P.U1), popcount(P.U2), popcount(P.A)
    v1, v2, ap = popcount(Q.V1), popcount(Q.V2), popcount(Q.Ap)
    s1 = Fraction(B + (b - 1) * u2 - a, 2 * b - 1)
    s2 = Fraction(B + (b - 1) * u2 - v1, 2 * b - 1)
    t1 = (B + (c - 1) * v2 - ap - Fraction(u1 * (c - 1), b)) / (2 * c - 1)
    t2 = (B + (c - 1) * v2 - u1 - Fraction(u1 * (c - 1), b)) / (2 * c - 1)
    mu = max(0, floor(min(Fraction(nu), Fraction(u2 // 2), Fraction(d1), s1, s2)))
    mv = max(0, floor(min(Fraction(nv), Fraction(d2), t1, t2)))
    return mu, mv, {"s1": s1, "s2": s2, "t1": t1, "t2": t2}


def greedy_factor_parallel(
    g: Graph,
    k: int,
    P: Partition,
    seeds_u: Sequence[tuple[int, ...]],
    Q: SecondPartition,
    seeds_v: Sequence[tuple[int, ...]],
    d1: int,
    d2: int,
    dec: CliqueComponentDecomposition | None = None,
    b: int | None = None,
) -> ConnectedCliqueFactor:
    """Two processes, one from K_b's in U_1 and one from K_c's in V_1, run in tandem.

    Stage one grows the U-cliques inside U_1 for k−b+1 steps and the
    V-cliques inside V_1 for the last k−c+1 of those steps; a clique that
    cannot grow is frozen.  Stage two visits the cliques with U before V,
    smaller before larger and seed order within a size, and adds one vertex
    of X_1, ..., X_{k−2} in turn, then one vertex outside
    U_1 ∪ V_1 ∪ X_1 ∪ ... ∪ X_{k−2}.
    """
    seeds_u = [tuple(s) for s in seeds_u]
    seeds_v = [tuple(s) for s in seeds_v]
    if seeds_u:
        b = len(seeds_u[0])
    elif b is None:
        b = len(seeds_v[0]) if seeds_v else 2
    c = len(seeds_v[0]) if seeds_v else b
    if not 2 <= b <= c <= k:
        raise PreconditionError("need 2 ≤ b ≤ c ≤ k")
    if d1 < 0 or d2 < 0 or popcount(Q.V2) < 2 * d2 + d1:
        raise PreconditionError("need d_1, d_2 ≥ 0 and |V_2| ≥ 2d_2 + d_1")
    dec = dec or decompose(g, k)
    cid = verify_parallel_hypotheses(g, k, P, Q, dec)
    _check_seeds(g, seeds_u, P.U1, b, "F^U")
    _check_seeds(g, seeds_v, Q.V1, c, "F^V")
    mu, mv, quant = parallel_caps(g, k, P, Q, len(seeds_u), len(seeds_v), b, c, d1, d2)
    ucl = [list(s) for s in seeds_u[:mu]]
    vcl = [list(s) for s in seeds_v[:mv]]

    # stage one
    ufrozen = [False] * len(ucl)
    vfrozen = [False] * len(vcl)
    for j in range(1, k - b + 2):
        _grow_inside(g, ucl, ufrozen, P.U1)
        if j > c - b:
            _grow_inside(g, vcl, vfrozen, Q.V1)
    order = sorted(range(len(ucl)), key=lambda i: (len(ucl[i]), i))
    cliques = [ucl[i] for i in order] + [vcl[i] for i in sorted(range(len(vcl)), key=lambda i: (len(vcl[i]), i))]

    # stage two
    layers = 0
    for x in P.X[: k - 2]:
        layers |= x
    targets = list(P.X[: k - 2]) + [g.vertex_mask & ~(P.U1 | Q.V1 | layers)]
    occupied = 0
    for cl in cliques:
        occupied |= _mask(cl)
    for j, target in enumerate(targets, start=1):
        for cl in cliques:
            if len(cl) > k:
                continue
            cand = g.common_neighbors(_mask(cl)) & target & ~occupied
            if cand:
                v = lowest(cand)
                cl.append(v)
                occupied |= 1 << v
            elif len(cl) <= j + 1:
                raise ExtensionFailure(f"stage two, step {j}", tuple(cl))
    for cl in cliques:
        if len(cl) != k + 1:
            raise ExtensionFailure("end of stage two", tuple(cl))
    out_cl = tuple(tuple(sorted(cl)) for cl in cliques)
    comp = factor_component(dec, list(out_cl)) if out_cl else cid
    assert not out_cl or comp is not None
    audit = tuple(sorted(quant.items())) + (("m_U", mu), ("m_V", mv))
    out = ConnectedCliqueFactor(k, out_cl, comp, bound=(k + 1) * (mu + mv), audit=audit)
    assert out.validate(g, dec) and out.size >= (k + 1) * (mu + mv)
    return out


def _grow_inside(g: Graph, cliques: list[list[int]], frozen: list[bool], inside: int) -> None:
    occupied = 0
    for cl in cliques:
        occupied |= _mask(cl)
    for i, cl in enumerate(cliques):
        if frozen[i]:
            continue
        cand = g.common_neighbors(_mask(cl)) & inside & ~occupied
        if cand:
            v = lowest(cand)
            cl.append(v)
            occupied |= 1 << v
        else:
            frozen[i] = True


def greedy_factor_two_stage(
    g: Graph,
    k: int,
    P: Partition,
    seed: Sequence[tuple[int, ...]],
    dec: CliqueComponentDecomposition | None = None,
    b: int = 2,
) -> ConnectedCliqueFactor:
    """Single-partition version: the second process is empty.

    Guarantees (k+1)·min{|seed|, ⌊|U_2|/2⌋, s_1} with
    s_1 = (kδ−(k−1)n + (b−1)|U_2| − |A|)/(2b−1).
    """
    if len(P.X) != k - 1:
        raise PreconditionError(f"need {k - 1} sets X_i, got {len(P.X)}")
    layers = 0
    for x in P.X[: k - 2]:
        layers |= x
    V2 = g.vertex_mask & ~layers
    Q = SecondPartition(0, V2)
    return greedy_factor_parallel(g, k, P, seed, Q, (), popcount(V2), 0, dec=dec, b=b)


def _layered_cliques(g: Graph, U1: int, X: tuple[int, ...], depth: int) -> list[tuple[int, ...]]:
    """Cliques made of an edge of U_1 plus one vertex from each of X_1..X_depth."""
    out = []

    def rec(cl: list[int], common: int, h: int) -> None:
        if h == depth:
            out.append(tuple(sorted(cl)))
            return
        for v in iter_bits(common & X[h]):
            rec(cl + [v], common & g.adj[v], h + 1)

    for u, v in g.edges():
        if U1 >> u & 1 and U1 >> v & 1:
            rec([u, v], g.adj[u] & g.adj[v], 0)
    return out


def verify_matching_hypotheses(
    g: Graph, k: int, P: Partition, dec: CliqueComponentDecomposition | None = None
) -> int | None:
    if len(P.X) != k - 1:
        raise PreconditionError(f"need {k - 1} sets X_i, got {len(P.X)}")
    _check_partition(g, P.classes(), "partition")
    d = _check_min_degree(g, k)
    _check_no_edge(g, P.U1, P.U2, "U_1–U_2")
    for i, x in enumerate(P.X, start=1):
        if popcount(x) > g.n - d:
            raise HypothesisViolation("size", f"|X_{i}| = {popcount(x)} > n−δ = {g.n - d}")
    dec = dec or decompose(g, k)
    ids = _components_of(dec, _layered_cliques(g, P.U1, P.X, k - 2))
    if len(ids) > 1:
        raise HypothesisViolation("connected", f"K_k's spread over components {sorted(ids)}")
    for i in range(1, k - 1):
        for c in _layered_cliques(g, P.U1, P.X, i - 1):
            sl = g.common_neighbors(_mask(c)) & P.X[i - 1]
            if not g.is_independent(sl):
                raise HypothesisViolation("independent", f"X_{i} ∩ Γ{c} spans an edge")
    return ids.pop() if ids else None


def greedy_factor_matching(
    g: Graph,
    k: int,
    P: Partition,
    F: Matching,
    dec: CliqueComponentDecomposition | None = None,
) -> ConnectedCliqueFactor:
    """Extend min{|F|, q} edges of a matching in U_1 through X_1, ..., X_{k−1}.

    q = kδ−(k−1)n + |U_2| − |U_1| − |A|.  Every step succeeds under the
    hypotheses, so any failure raises.
    """
    dec = dec or decompose(g, k)
    verify_matching_hypotheses(g, k, P, dec)
    _check_seeds(g, [tuple(e) for e in F], P.U1, 2, "F")
    n, d = g.n, g.min_degree()
    q = k * d - (k - 1) * n + popcount(P.U2) - popcount(P.U1) - popcount(P.A)
    m = max(0, min(len(F), q))
    cliques = [list(e) for e in F[:m]]
    occupied = 0
    for cl in cliques:
        occupied |= _mask(cl)
    for j in range(1, k):
        for cl in cliques:
            cand = g.common_neighbors(_mask(cl)) & P.X[j - 1] & ~occupied
            if not cand:
                raise ExtensionFailure(f"step {j}", tuple(cl))
            v = lowest(cand)
            cl.append(v)
            occupied |= 1 << v
    out_cl = tuple(tuple(sorted(cl)) for cl in cliques)
    comp = factor_component(dec, list(out_cl)) if out_cl else None
    out = ConnectedCliqueFactor(k, out_cl, comp, bound=(k + 1) * m, audit=(("q", q),))
    assert out.validate(g, dec)
    return out


@dataclass(frozen=True)
class LayeredInstance:
    partition: Partition
    matching: Matching
    q: int
    anchors: tuple[int, ...]


def layered_instance(
    g: Graph, dec: CliqueComponentDecomposition, c1: int | None = None
) -> LayeredInstance:
    """Partition for the matching builder when the interior has no K_k.

    Anchors u_{k−1}, ..., u_1 are picked inside the interior, each a common
    neighbour of the previous ones; L_i is the part of the current common
    neighbourhood missed by u_i.  U_1 is the exterior of c1 (default: the
    largest exterior) and U_2 the union of the others.
    """
    k, n = dec.k, g.n
    if len(dec.components) < 2:
        raise PreconditionError("need at least two components")
    intr = dec.interior
    if next(iter_cliques(g, k, intr), None) is not None:
        raise PreconditionError("interior contains a K_k")
    if c1 is None:
        c1 = max(dec.components, key=lambda c: (popcount(c.exterior), -c.id)).id
    layers = [0] * (k - 1)
    anchors = []
    pool = intr
    for i in range(k - 2, -1, -1):
        u = lowest(pool)
        anchors.append(u)
        layers[i] = pool & ~g.adj[u]
        pool &= g.adj[u]
    U1 = dec.components[c1].exterior
    U2 = 0
    for c in dec.components:
        if c.id != c1:
            U2 |= c.exterior
    P = Partition(U1, U2, tuple(layers), g.vertex_mask & ~(U1 | U2 | intr))
    d = g.min_degree()
    B = k * d - (k - 1) * n
    sub, names = g.induced(U1)
    M = [(names[a], names[b]) for a, b in min_degree_matching(sub)][: max(0, min(B, popcount(U1) // 2))]
    q = B + popcount(U2) - popcount(U1) - popcount(P.A)
    return LayeredInstance(P, M, q, tuple(anchors))


def hall_extension_factor(
    g: Graph,
    exterior: int,
    independent_sets: Sequence[int],
    seed: Matching,
    dec: CliqueComponentDecomposition | None = None,
) -> ConnectedCliqueFactor:
    """Grow matched edges through I_1, I_2, ... by a maximum bipartite matching per step.

    Step j matches the cliques of F_{j−1} to vertices of I_j that are common
    neighbours.  With a_j and b_j the least degrees on the two sides of that
    auxiliary graph, at least min{a_j+b_j, |F_{j−1}|, |I_j|} cliques survive;
    each audit row records (j, a_j, b_j, |F_{j−1}|, |I_j|, guaranteed, kept).
    """
    sets = list(independent_sets)
    seen = 0
    for s in sets:
        if s & seen or not g.is_independent(s):
            raise PreconditionError("independent sets must be pairwise disjoint and independent")
        seen |= s
    for e in seed:
        if not (exterior >> e[0] & 1 and exterior >> e[1] & 1):
            raise PreconditionError("seed edges must lie in the exterior")
    _check_seeds(g, [tuple(e) for e in seed], exterior, 2, "seed")
    k = len(sets) + 1
    cliques = [list(e) for e in seed]
    rows = []
    n = g.n
    for j, I in enumerate(sets, start=1):
        m = len(cliques)
        aux = [0] * (n + m)
        for i, cl in enumerate(cliques):
            cand = g.common_neighbors(_mask(cl)) & I
            aux[n + i] = cand
            for v in iter_bits(cand):
                aux[v] |= 1 << (n + i)
        left = _mask(range(n, n + m))
        a_j = min((popcount(aux[n + i]) for i in range(m)), default=0)
        b_j = min((popcount(aux[v]) for v in iter_bits(I)), default=0)
        match = maximum_bipartite_matching(Graph(n + m, aux), left, I)
        guaranteed = min(a_j + b_j, m, popcount(I))
        assert len(match) >= guaranteed
        cliques = [cliques[x - n] + [v] for x, v in sorted(match)]
        rows.append((j, a_j, b_j, m, popcount(I), guaranteed, len(cliques)))
    out_cl = [tuple(sorted(cl)) for cl in cliques]
    dec = dec if dec is not None and dec.k == k else decompose(g, k)
    comp = None
    if out_cl:
        tally = Counter(dec.component_of_clique(c[:k]) for c in out_cl)
        comp = min(tally, key=lambda c: (-tally[c], c))
        kept = [c for c in out_cl if dec.component_of_clique(c[:k]) == comp]
        if len(kept) < len(out_cl):
            rows.append(("dropped outside component", len(out_cl) - len(kept)))
        out_cl = kept
    out = ConnectedCliqueFactor(k, tuple(out_cl), comp, complete=bool(sets), audit=tuple(rows))
    assert out.validate(g, dec)
    return out
