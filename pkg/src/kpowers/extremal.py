"""Extremal graphs G_p and G_c, and the longest power path inside G_p.

G_p(k, n, δ) takes k−1 independent sets I_1..I_{k−1} of size n−δ, makes
them pairwise complete, and adds r_p balanced cliques X_1..X_r on the
remaining vertices, each complete to every I_j.  G_c does the same with r_c
cliques and then joins one vertex of X_1 (the apex) to every clique smaller
than X_1.

Vertices are numbered I_1, ..., I_{k−1}, X_1, ..., X_r in that order, and
the apex is the last vertex of X_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError
from .graphs import Graph, iter_bits, members, popcount
from .powersearch.witness import PowerPathWitness, is_power_path
from .thresholds import PowerParams, compute_profile


@dataclass(frozen=True)
class ExtremalLayout:
    k: int
    n: int
    delta: int
    independent_sets: tuple[int, ...]
    cliques: tuple[int, ...]
    apex: int | None = None

    @property
    def interior(self) -> int:
        m = 0
        for s in self.independent_sets:
            m |= s
        return m

    def check(self, g: Graph) -> bool:
        """Verify the layout invariants against the graph."""
        parts = list(self.independent_sets) + list(self.cliques)
        union = 0
        for p in parts:
            if union & p:
                return False
            union |= p
        if union != g.vertex_mask:
            return False
        if not all(g.is_independent(s) for s in self.independent_sets):
            return False
        if not all(g.is_clique(x) for x in self.cliques):
            return False
        for a, b in combinations(self.independent_sets, 2):
            if any(g.adj[v] & b != b for v in iter_bits(a)):
                return False
        for s in self.independent_sets:
            for x in self.cliques:
                if any(g.adj[v] & s != s for v in iter_bits(x)):
                    return False
        sizes = [popcount(x) for x in self.cliques]
        return sizes == sorted(sizes, reverse=True) and sizes[0] - sizes[-1] <= 1


def _build(params: PowerParams, r: int) -> tuple[list[int], ExtremalLayout]:
    k, n, d = params.k, params.n, params.delta
    w = n - d
    if (k - 1) * w >= n:
        raise DomainError("need (k−1)(n−δ) < n")
    A = n - (k - 1) * w
    base, extra = divmod(A, r)
    sizes = [base + 1] * extra + [base] * (r - extra)
    ind = []
    start = 0
    for _ in range(k - 1):
        ind.append(((1 << w) - 1) << start)
        start += w
    cliques = []
    for s in sizes:
        cliques.append(((1 << s) - 1) << start)
        start += s
    interior = sum(ind)
    outside = ((1 << n) - 1) & ~interior
    adj = [0] * n
    for s in ind:
        for v in iter_bits(s):
            adj[v] = (interior & ~s) | outside
    for x in cliques:
        for v in iter_bits(x):
            adj[v] = (x & ~(1 << v)) | interior
    return adj, ExtremalLayout(k, n, d, tuple(ind), tuple(cliques))


def build_G_p(params: PowerParams) -> tuple[Graph, ExtremalLayout]:
    r = compute_profile(params).r_p
    adj, layout = _build(params, r)
    g = Graph(params.n, adj)
    assert g.min_degree() >= params.delta
    assert all(g.degree(v) == params.delta for v in iter_bits(layout.interior))
    return g, layout


def build_G_c(params: PowerParams) -> tuple[Graph, ExtremalLayout]:
    r = compute_profile(params).r_c
    adj, layout = _build(params, r)
    x1 = layout.cliques[0]
    apex = x1.bit_length() - 1
    top = popcount(x1)
    for x in layout.cliques[1:]:
        if popcount(x) != top:
            adj[apex] |= x
            for v in iter_bits(x):
                adj[v] |= 1 << apex
    g = Graph(params.n, adj)
    assert g.min_degree() >= params.delta
    layout = ExtremalLayout(layout.k, layout.n, layout.delta, layout.independent_sets, layout.cliques, apex)
    return g, layout


def build_balanced_multipartite(k: int, n: int, delta: int) -> Graph:
    """Complete (k+1)-partite graph with k parts of size n−δ and one of size kδ−(k−1)n."""
    last = k * delta - (k - 1) * n
    if last < 1 or delta >= n:
        raise DomainError("need kδ − (k−1)n ≥ 1 and δ < n")
    sizes = [n - delta] * k + [last]
    full = (1 << n) - 1
    adj = [0] * n
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        for v in iter_bits(part):
            adj[v] = full & ~part
        start += s
    return Graph(n, adj)


def construct_longest_power_path(g: Graph, layout: ExtremalLayout, k: int) -> PowerPathWitness:
    """Round robin over I_1..I_{k−1}, then two vertices of X_1, until X_1 runs out.

    A final round of I-vertices is added when the last X-chunk was a pair,
    since it then still fits the window.  Exhausted I's are skipped.
    """
    pools = [members(s) for s in layout.independent_sets]
    xs = members(layout.cliques[0])
    seq: list[int] = []
    last_pair = True
    while xs:
        for p in pools:
            if p:
                seq.append(p.pop(0))
        take, xs = xs[:2], xs[2:]
        seq.extend(take)
        last_pair = len(take) == 2
    if last_pair:
        for p in pools:
            if p:
                seq.append(p.pop(0))
    prof = compute_profile(PowerParams(layout.k, layout.n, layout.delta))
    if not is_power_path(g, seq, k) or len(seq) != prof.pp:
        from .powersearch.search import longest_power_path_exact

        w = longest_power_path_exact(g, k)
        if len(w) != prof.pp:
            raise RuntimeError(f"no power path of length pp={prof.pp} found in layout graph")
        return w
    return PowerPathWitness(k, tuple(seq))


def certify_upper_bound(g: Graph, layout: ExtremalLayout, k: int, witness: PowerPathWitness) -> bool:
    """Re-derive ℓ ≤ pp for a power path in G_p from its vertex distribution.

    A (k+1)-window is a clique, so it meets at most one X_i and at most one
    vertex of each I_j; consecutive windows share k vertices, not all of
    which can sit in the k−1 independent sets, so the whole path meets at
    most one X_i.  Each I_j takes at most ⌈ℓ/(k+1)⌉ vertices.  Cutting the
    path into ⌊ℓ/(k+1)⌋ disjoint windows plus a tail, each full window holds
    at least two X-vertices and the tail of length t at least max(0, t−k+1),
    which is what bounds ℓ by pp for odd s_p as well.
    """
    seq = witness.sequence
    ell = len(seq)
    if not is_power_path(g, seq, k):
        return False
    prof = compute_profile(PowerParams(layout.k, layout.n, layout.delta))
    if ell <= 1:
        return ell <= prof.pp
    wm = sum(1 << v for v in seq)
    touched = [x for x in layout.cliques if x & wm]
    if len(touched) > 1:
        return False
    alpha = -(-ell // (k + 1))
    if any(popcount(s & wm) > alpha for s in layout.independent_sets):
        return False
    in_x = popcount(touched[0] & wm) if touched else 0
    if ell - (k - 1) * alpha > in_x or in_x > prof.s_p:
        return False
    q, t = divmod(ell, k + 1)
    if 2 * q + max(0, t - (k - 1)) > in_x:
        return False
    return ell <= prof.pp


def step_up_ladder(g: Graph, layout: ExtremalLayout, k: int) -> PowerPathWitness:
    """P^k of length pp in G_p from a plain path on X_1, raised k−1 times.

    Step j inserts ⌊s'/2⌋+1 vertices of I_j into a path on s' vertices of
    X_1.  Usually s' = |X_1|.  When pp is capped at n the independent sets
    are too small for the whole clique, so the ladder runs on the largest s'
    with ⌊s'/2⌋+1 ≤ n−δ and the unused X_1 vertices are appended at the end.
    """
    from .powersearch.stepup import power_step_up

    xs = members(layout.cliques[0])
    width = layout.n - layout.delta
    s = min(len(xs), 2 * width - 1)
    w: PowerPathWitness = PowerPathWitness(1, tuple(xs[:s]))
    for j in range(k - 1):
        up = power_step_up(g, w, layout.independent_sets[j])
        assert isinstance(up, PowerPathWitness)
        w = up
    seq = w.sequence + tuple(xs[s:])
    out = PowerPathWitness(k, seq)
    assert out.validate(g)
    return out
