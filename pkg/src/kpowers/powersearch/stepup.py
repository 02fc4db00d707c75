"""Raise the power of a path or cycle by one, inserting one new vertex per block."""

from __future__ import annotations

from ..errors import InsertionFailure
from ..graphs import Graph, VertexLike, as_mask, iter_bits, popcount
from ..graphs.bits import lowest
from ..graphs.matching import maximum_bipartite_matching
from .witness import PowerCycleWitness, PowerPathWitness, is_power_cycle, is_power_path


def _blocks_path(seq: tuple[int, ...], h: int) -> tuple[list[list[int]], list[list[int]]]:
    """Insertion segments and neighbourhood sets for an h-th power path.

    segment i is what follows q_i in the output; hood i is Q_i, the set
    q_i must be complete to.
    """
    m = len(seq)
    ell = m // (h + 1)
    blocks = [list(seq[(h + 1) * i:(h + 1) * (i + 1)]) for i in range(ell)]
    tail = list(seq[(h + 1) * ell:])
    segments = blocks + [tail]
    hoods = []
    for i in range(ell + 1):
        if i == 0:
            hoods.append(blocks[0] if ell else tail)
        elif i < ell:
            hoods.append(blocks[i - 1] + blocks[i])
        else:
            hoods.append(blocks[ell - 1] + tail)
    return segments, hoods


def _blocks_cycle(cyc: tuple[int, ...], h: int) -> tuple[list[list[int]], list[list[int]]]:
    m = len(cyc)
    if m % (h + 1):
        raise InsertionFailure(0, f"cycle length {m} is not a multiple of {h + 1}")
    ell = m // (h + 1)
    blocks = [list(cyc[(h + 1) * i:(h + 1) * (i + 1)]) for i in range(ell)]
    hoods = [blocks[i - 1] + blocks[i] for i in range(ell)]
    return blocks, hoods


def choose_insertions(g: Graph, hoods: list[list[int]], W: int) -> list[int]:
    """One distinct vertex of W per hood, each complete to its hood.

    Hoods are served in ascending order of availability, taking the least
    free common neighbour.  If that greedy pass gets stuck a maximum
    bipartite matching decides; a hood left unmatched there is starved and
    no choice can exist.
    """
    avail = []
    for hd in hoods:
        c = W
        for v in hd:
            c &= g.adj[v]
        avail.append(c)
    order = sorted(range(len(hoods)), key=lambda i: (popcount(avail[i]), i))
    chosen = [-1] * len(hoods)
    taken = 0
    for i in order:
        free = avail[i] & ~taken
        if not free:
            break
        chosen[i] = lowest(free)
        taken |= 1 << chosen[i]
    else:
        return chosen
    # Hall check through an auxiliary bipartite graph: hood i is vertex g.n + i
    n = g.n
    rows = [0] * (n + len(hoods))
    for i, c in enumerate(avail):
        rows[n + i] = c
        for w in iter_bits(c):
            rows[w] |= 1 << (n + i)
    aux = Graph(n + len(hoods), rows)
    left = sum(1 << (n + i) for i in range(len(hoods)))
    m = maximum_bipartite_matching(aux, left, W)
    if len(m) < len(hoods):
        matched = {a - n for a, _ in m}
        starved = min(i for i in range(len(hoods)) if i not in matched)
        raise InsertionFailure(starved)
    for a, b in m:
        chosen[a - n] = b
    return chosen


def power_step_up(
    g: Graph, base: PowerPathWitness | PowerCycleWitness, W: VertexLike
) -> PowerPathWitness | PowerCycleWitness:
    """(h+1)-th power built from an h-th power witness and fresh vertices W."""
    wm = as_mask(W)
    h = base.k
    if isinstance(base, PowerCycleWitness):
        seq = base.cycle
        if not is_power_cycle(g, seq, h):
            raise ValueError("base is not a valid power cycle")
        segments, hoods = _blocks_cycle(seq, h)
    else:
        seq = base.sequence
        if not is_power_path(g, seq, h):
            raise ValueError("base is not a valid power path")
        segments, hoods = _blocks_path(seq, h)
    if wm & sum(1 << v for v in seq):
        raise ValueError("W must be disjoint from the base")
    qs = choose_insertions(g, hoods, wm)
    out: list[int] = []
    for q, seg in zip(qs, segments):
        out.append(q)
        out.extend(seg)
    if isinstance(base, PowerCycleWitness):
        res: PowerPathWitness | PowerCycleWitness = PowerCycleWitness(h + 1, tuple(out))
    else:
        res = PowerPathWitness(h + 1, tuple(out), optimal=False)
    assert res.validate(g), "step-up produced an invalid witness"
    return res
