"""Witness types for k-th powers of paths and cycles, with raw validation."""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import Graph


def is_power_path(g: Graph, seq: list[int] | tuple[int, ...], k: int) -> bool:
    if len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    for i, v in enumerate(seq):
        for j in range(i + 1, min(i + k + 1, len(seq))):
            if not g.has_edge(v, seq[j]):
                return False
    return True


def is_power_cycle(g: Graph, cyc: list[int] | tuple[int, ...], k: int) -> bool:
    m = len(cyc)
    if m < k + 1 or len(set(cyc)) != m or any(not 0 <= v < g.n for v in cyc):
        return False
    for i in range(m):
        for d in range(1, min(k, m // 2) + 1):
            if not g.has_edge(cyc[i], cyc[(i + d) % m]):
                return False
    return True


@dataclass(frozen=True)
class PowerPathWitness:
    k: int
    sequence: tuple[int, ...]
    optimal: bool = True

    def __len__(self) -> int:
        return len(self.sequence)

    def validate(self, g: Graph) -> bool:
        return is_power_path(g, self.sequence, self.k)


@dataclass(frozen=True)
class PowerCycleWitness:
    k: int
    cycle: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle)

    def validate(self, g: Graph) -> bool:
        return is_power_cycle(g, self.cycle, self.k)
