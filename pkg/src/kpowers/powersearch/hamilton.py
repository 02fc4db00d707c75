"""Hamilton cycles under Dirac's condition, and paths/cycles that keep bad vertices apart."""

from __future__ import annotations

from collections import deque
from typing import Literal

from ..errors import HypothesisViolation, PreconditionError
from ..graphs import Graph, VertexLike, as_mask, iter_bits, popcount
from ..graphs.bits import lowest


def _close(g: Graph, path: list[int]) -> list[int] | None:
    """Turn a path whose ends see only path vertices into a cycle on the same set."""
    a, b = path[0], path[-1]
    if g.has_edge(a, b):
        return path
    for i in range(len(path) - 2):
        if g.has_edge(a, path[i + 1]) and g.has_edge(b, path[i]):
            return path[: i + 1] + path[i + 1:][::-1]
    return None


def dirac_hamilton_cycle(g: Graph, start: int = 0) -> list[int]:
    """Hamilton cycle in a graph with n ≥ 3 and δ ≥ n/2.

    Grow a path at both ends while possible.  A maximal path closes into a
    cycle on its vertex set, since the two ends together have at least n
    neighbours on it.  If that cycle misses a vertex, connectivity gives an
    outside neighbour, which opens the cycle into a longer path.  When no
    closing pair exists (impossible under the degree condition) a Pósa
    rotation moves an end and the loop retries.
    """
    n = g.n
    if n < 3 or 2 * g.min_degree() < n:
        raise PreconditionError("need n ≥ 3 and δ(g) ≥ n/2")
    path = deque([start])
    used = 1 << start
    rotations = 0
    while True:
        grew = True
        while grew:
            grew = False
            free = g.adj[path[-1]] & ~used
            if free:
                v = lowest(free)
                path.append(v)
                used |= 1 << v
                grew = True
            free = g.adj[path[0]] & ~used
            if free:
                v = lowest(free)
                path.appendleft(v)
                used |= 1 << v
                grew = True
        seq = list(path)
        cyc = _close(g, seq)
        if cyc is None:
            # rotate the far end along a chord and try again
            rotations += 1
            if rotations > n * n:
                raise RuntimeError("rotation-extension did not converge")
            b = seq[-1]
            for i in range(len(seq) - 3, -1, -1):
                if g.has_edge(b, seq[i]):
                    seq = seq[: i + 1] + seq[i + 1:][::-1]
                    break
            path = deque(seq)
            continue
        if len(cyc) == n:
            return cyc
        for idx, c in enumerate(cyc):
            out = g.adj[c] & ~used
            if out:
                w = lowest(out)
                path = deque([w] + cyc[idx:] + cyc[:idx])
                used |= 1 << w
                break
        else:
            raise PreconditionError("graph is disconnected")


def is_hamilton_cycle(g: Graph, cyc: list[int]) -> bool:
    n = g.n
    return (
        len(cyc) == n
        and set(cyc) == set(range(n))
        and all(g.has_edge(cyc[i], cyc[(i + 1) % n]) for i in range(n))
    )


def _sub_cycle(g: Graph, keep: int) -> list[int]:
    sub, names = g.induced(keep)
    return [names[v] for v in dirac_hamilton_cycle(sub)]


def check_bad_vertex_hypotheses(g: Graph, B: int) -> None:
    h, b = g.n, popcount(B)
    if h < 10:
        raise HypothesisViolation("h ≥ 10", f"h = {h}")
    if 100 * b > h:
        raise HypothesisViolation("|B| ≤ h/100", f"|B| = {b}")
    for v in range(h):
        d = g.degree(v)
        if B >> v & 1:
            if d < 4 * b + 2:
                raise HypothesisViolation("B-degree", f"vertex {v} has degree {d} < {4 * b + 2}")
        elif 2 * d < h + 10 * b + 10:
            raise HypothesisViolation("outside degree", f"vertex {v} has degree {d} < h/2 + 5|B| + 5")


def _gadget(H: Graph, B: list[int], x: int, y: int) -> list[int]:
    """x y u_0 w_0 v_0 b_1 u_1 w_1 v_1 ... b_t u_t w_t v_t, greedy least-index choices."""
    t = len(B)
    taken = (1 << x) | (1 << y)
    for b in B:
        taken |= 1 << b
    u = [-1] * (t + 1)
    v = [-1] * (t + 1)
    for i, b in enumerate(B, start=1):
        free = H.adj[b] & ~taken
        if popcount(free) < 2:
            raise RuntimeError(f"bad vertex {b} has no two free neighbours")
        u[i] = lowest(free)
        free &= free - 1
        v[i - 1] = lowest(free)
        taken |= 1 << u[i] | 1 << v[i - 1]
    free = H.adj[y] & ~taken
    u[0] = lowest(free)
    taken |= 1 << u[0]
    free = H.vertex_mask & ~taken
    v[t] = lowest(free)
    taken |= 1 << v[t]
    w = []
    for i in range(t + 1):
        free = H.adj[u[i]] & H.adj[v[i]] & ~taken
        wi = lowest(free)
        taken |= 1 << wi
        w.append(wi)
    P = [x, y, u[0], w[0], v[0]]
    for i, b in enumerate(B, start=1):
        P += [b, u[i], w[i], v[i]]
    return P


def path_cycle_avoiding_bad(
    g: Graph,
    B: VertexLike,
    mode: Literal["cycle", "path"],
    ell: int,
    x: int | None = None,
    y: int | None = None,
) -> list[int]:
    """A cycle C_ℓ, or an ℓ-vertex x–y path, spreading the vertices of B out.

    No four consecutive vertices hold more than one vertex of B (for paths,
    of B ∪ {x, y}).  The input graph is never modified; a missing x–y edge
    in path mode is added on a shadow copy only.
    """
    bm = as_mask(B)
    check_bad_vertex_hypotheses(g, bm)
    h = g.n
    bl = list(iter_bits(bm))
    t = len(bl)
    if mode == "cycle":
        if not 3 <= ell <= h:
            raise PreconditionError("need 3 ≤ ℓ ≤ h")
        x = y = None
        for a, c in g.edges():
            if not (bm >> a & 1 or bm >> c & 1):
                x, y = a, c
                break
        assert x is not None and y is not None
        H = g
    elif mode == "path":
        if x is None or y is None or x == y:
            raise PreconditionError("path mode needs distinct end-vertices x and y")
        if bm >> x & 1 or bm >> y & 1:
            raise HypothesisViolation("x, y ∉ B")
        if not 5 <= ell <= h:
            raise PreconditionError("need 5 ≤ ℓ ≤ h")
        H = g if g.has_edge(x, y) else g.with_edges([(x, y)])
    else:
        raise ValueError(f"unknown mode {mode!r}")

    if ell >= h - t - 2:
        P = _gadget(H, bl, x, y)
        rest = H.vertex_mask & ~sum(1 << p for p in P)
        q = _sub_cycle(H, rest)
        m = len(q)
        off = ell - 4 * t - 6
        last = P[-1]
        i = next(i for i in range(m) if H.has_edge(q[i], x) and H.has_edge(q[(i + off) % m], last))
        tail = [q[(i + j) % m] for j in range(off, -1, -1)]
        cyc = P + tail
    else:
        keep = H.vertex_mask & ~bm & ~(1 << x) & ~(1 << y)
        s = _sub_cycle(H, keep)
        m = len(s)
        off = ell - 3
        i = next(i for i in range(m) if H.has_edge(s[i], x) and H.has_edge(s[(i + off) % m], y))
        cyc = [x] + [s[(i + j) % m] for j in range(off + 1)] + [y]
    assert len(cyc) == ell

    if mode == "path":
        # the cycle runs ... x y ... or x ... y; drop the x–y edge
        if cyc[1] == y:
            out = [x] + cyc[2:][::-1] + [y]
        else:
            out = cyc
        assert out[0] == x and out[-1] == y
        assert check_spread(g, out, bm | 1 << x | 1 << y, cyclic=False)
        return out
    assert check_spread(g, cyc, bm, cyclic=True)
    return cyc


def check_spread(g: Graph, seq: list[int], bad: int, cyclic: bool) -> bool:
    """Valid path/cycle in g with at most one bad vertex in any four consecutive."""
    m = len(seq)
    if len(set(seq)) != m:
        return False
    pairs = m if cyclic else m - 1
    if any(not g.has_edge(seq[i], seq[(i + 1) % m]) for i in range(pairs)):
        return False
    starts = range(m) if cyclic else range(max(0, m - 3))
    for i in starts:
        window = [seq[(i + j) % m] for j in range(min(4, m))]
        if sum(bad >> v & 1 for v in window) > 1:
            return False
    return True
