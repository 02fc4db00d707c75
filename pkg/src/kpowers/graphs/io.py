"""graph6 and plain edge-list formats."""

from __future__ import annotations

from ..errors import PreconditionError
from .core import Graph


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    raise PreconditionError("graph6 supports at most 258047 vertices")


def to_graph6(g: Graph) -> str:
    """Encode without the optional ``>>graph6<<`` header."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    data = _encode_n(g.n)
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = v << 1 | b
        data.append(v)
    return "".join(chr(c + 63) for c in data)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(v < 0 or v > 63 for v in vals):
        raise PreconditionError("not a graph6 string")
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise PreconditionError("unsupported graph6 size prefix")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise PreconditionError(f"graph6 body has {len(body)} bytes, expected {need}")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if body[pos // 6] >> (5 - pos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, adj)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; an ``n N`` line fixes the vertex count, ``#`` starts a comment."""
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        a, b = line.split()
        if a == "n":
            n = int(b)
            continue
        edges.append((int(a), int(b)))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)
