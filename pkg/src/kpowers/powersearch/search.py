"""Exact search for k-th powers of paths and cycles.

Both searches extend a sequence one vertex at a time; the next vertex must
be adjacent to the last k placed.  Two reductions keep desk-scale instances
cheap:

* twins.  Vertices with equal open or equal closed neighbourhoods are
  interchangeable, so at each branch only the least unused vertex of every
  twin class is tried.
* memo.  The future of a partial sequence depends only on the last-k
  window and on which vertices are used; used vertices outside the window
  matter only through how many of each twin class are gone.  That pair is
  the memo key.
"""

from __future__ import annotations

from collections import defaultdict

from ..errors import BudgetExceeded
from ..graphs import Graph, iter_bits, popcount
from .witness import PowerCycleWitness, PowerPathWitness, is_power_cycle, is_power_path

DEFAULT_BUDGET = 20_000_000


def twin_classes(g: Graph) -> list[int]:
    """Class index per vertex; members of a class are pairwise twins."""
    closed: dict[int, list[int]] = defaultdict(list)
    opened: dict[int, list[int]] = defaultdict(list)
    for v in range(g.n):
        closed[g.adj[v] | 1 << v].append(v)
        opened[g.adj[v]].append(v)
    cls = [-1] * g.n
    nxt = 0
    for groups in (closed, opened):
        for vs in groups.values():
            if len(vs) > 1 and cls[vs[0]] < 0:
                for v in vs:
                    cls[v] = nxt
                nxt += 1
    for v in range(g.n):
        if cls[v] < 0:
            cls[v] = nxt
            nxt += 1
    return cls


class _Found(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: int | None) -> None:
        self.nodes = 0
        self.budget = DEFAULT_BUDGET if budget is None else budget

    def tick(self) -> bool:
        self.nodes += 1
        return self.nodes > self.budget


def _class_reps(cand: int, cls: list[int]) -> list[int]:
    seen = set()
    out = []
    for v in iter_bits(cand):
        c = cls[v]
        if c not in seen:
            seen.add(c)
            out.append(v)
    return out


def longest_power_path_exact(
    g: Graph, k: int, budget: int | None = None, target: int | None = None
) -> PowerPathWitness:
    """Maximum-length k-th power of a path.

    With ``target`` the search stops as soon as a witness of that length
    exists and that witness is returned (flagged non-optimal unless it
    happens to use every vertex).
    """
    n = g.n
    if n == 0:
        return PowerPathWitness(k, ())
    cls = twin_classes(g)
    ncls = max(cls) + 1
    full = g.vertex_mask
    counter = _Counter(budget)
    memo: dict = {}
    seq: list[int] = []
    best_seq: list[int] = []
    counts = [0] * ncls

    def key(used: int) -> tuple:
        return (tuple(seq[-k:]), tuple(counts))

    def extend(used: int) -> int:
        nonlocal best_seq
        if len(seq) > len(best_seq):
            best_seq = seq[:]
            if target is not None and len(seq) >= target:
                raise _Found
        if counter.tick():
            raise BudgetExceeded(PowerPathWitness(k, tuple(best_seq), optimal=False), counter.nodes)
        kk = key(used)
        hit = memo.get(kk)
        if hit is not None:
            return hit
        cand = full & ~used
        for w in seq[-k:]:
            cand &= g.adj[w]
        room = popcount(full & ~used)
        best = 0
        for v in _class_reps(cand, cls):
            dropped = seq[-k] if len(seq) >= k else None
            if dropped is not None:
                counts[cls[dropped]] += 1
            seq.append(v)
            val = 1 + extend(used | 1 << v)
            seq.pop()
            if dropped is not None:
                counts[cls[dropped]] -= 1
            if val > best:
                best = val
                if best == room:
                    break
        memo[kk] = best
        return best

    try:
        best_len = 0
        for v in _class_reps(full, cls):
            seq.append(v)
            best_len = max(best_len, 1 + extend(1 << v))
            seq.pop()
            if best_len == n:
                break
    except _Found:
        w = PowerPathWitness(k, tuple(best_seq), optimal=len(best_seq) == n)
        assert w.validate(g)
        return w
    # rebuild a witness from the memo table
    out: list[int] = []
    seq.clear()
    used = 0
    remaining = best_len
    if best_len:
        for v in _class_reps(full, cls):
            seq.append(v)
            if 1 + extend(1 << v) == best_len:
                used = 1 << v
                break
            seq.pop()
        remaining -= 1
        while remaining:
            cand = full & ~used
            for w in seq[-k:]:
                cand &= g.adj[w]
            for v in _class_reps(cand, cls):
                dropped = seq[-k] if len(seq) >= k else None
                if dropped is not None:
                    counts[cls[dropped]] += 1
                seq.append(v)
                if 1 + extend(used | 1 << v) == remaining:
                    used |= 1 << v
                    break
                seq.pop()
                if dropped is not None:
                    counts[cls[dropped]] -= 1
            else:
                raise AssertionError("memo reconstruction failed")
            remaining -= 1
        out = seq[:]
    w = PowerPathWitness(k, tuple(out))
    assert is_power_path(g, w.sequence, k) and len(out) == best_len
    return w


def find_power_path(g: Graph, k: int, ell: int, budget: int | None = None) -> PowerPathWitness | None:
    """A k-th power of a path on exactly ``ell`` vertices, or None."""
    if ell <= 0:
        return PowerPathWitness(k, ())
    if ell > g.n:
        return None
    w = longest_power_path_exact(g, k, budget=budget, target=ell)
    if len(w) < ell:
        return None
    return PowerPathWitness(k, w.sequence[:ell], optimal=False)


def find_power_cycle(g: Graph, k: int, ell: int, budget: int | None = None) -> PowerCycleWitness | None:
    """A k-th power of a cycle on exactly ``ell`` vertices, or None if none exists.

    The witness is rooted at its least vertex, so from root s only vertices
    above s are placed.  Raises BudgetExceeded when the node budget runs out.
    """
    if ell < k + 1:
        raise ValueError("need ell ≥ k+1")
    n = g.n
    if ell > n:
        return None
    cls = twin_classes(g)
    ncls = max(cls) + 1
    counter = _Counter(budget)
    seq: list[int] = []
    counts = [0] * ncls
    dead: set = set()
    # a witness whose least vertex has a smaller twin maps onto one rooted at that twin
    roots = []
    seen_cls = set()
    for v in range(n):
        if cls[v] not in seen_cls:
            seen_cls.add(cls[v])
            roots.append(v)

    def grow(allowed: int) -> bool:
        p = len(seq)
        if p == ell:
            return True
        if counter.tick():
            raise BudgetExceeded(None, counter.nodes)
        if popcount(allowed) < ell - p:
            return False
        kk = None
        if p > k:
            kk = (p, tuple(seq[:k]), tuple(seq[-k:]), tuple(counts))
            if kk in dead:
                return False
        cand = allowed
        for w in seq[max(0, p - k):]:
            cand &= g.adj[w]
        for q in range(0, p + k - ell + 1):
            cand &= g.adj[seq[q]]
        for v in _class_reps(cand, cls):
            moved = seq[p - k] if p - k >= k else None
            if moved is not None:
                counts[cls[moved]] += 1
            seq.append(v)
            ok = grow(allowed & ~(1 << v))
            if ok:
                return True
            seq.pop()
            if moved is not None:
                counts[cls[moved]] -= 1
        if kk is not None:
            dead.add(kk)
        return False

    for s in roots:
        allowed = g.vertex_mask & ~((1 << (s + 1)) - 1)
        seq[:] = [s]
        counts[:] = [0] * ncls
        dead.clear()
        if grow(allowed):
            w = PowerCycleWitness(k, tuple(seq))
            assert is_power_cycle(g, w.cycle, k)
            return w
    return None


def naive_longest_power_path(g: Graph, k: int) -> int:
    """Length of a longest k-th power of a path by plain enumeration (tests only)."""
    n = g.n
    best = 0

    def rec(seq: list[int], used: int) -> None:
        nonlocal best
        best = max(best, len(seq))
        if best == n:
            return
        for v in range(n):
            if used >> v & 1:
                continue
            if all(g.has_edge(v, w) for w in seq[-k:]):
                seq.append(v)
                rec(seq, used | 1 << v)
                seq.pop()
                if best == n:
                    return

    rec([], 0)
    return best
