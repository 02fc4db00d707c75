"""Campaign configuration and the flat records campaigns emit."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Literal, Sequence

Outcome = Literal["pass", "fail", "counterexample-at-small-n", "budget"]
OUTCOMES = ("pass", "fail", "counterexample-at-small-n", "budget")


@dataclass(frozen=True)
class CampaignConfig:
    k_range: tuple[int, int]
    n_range: tuple[int, int]
    samples: int = 10
    seed: int = 0
    budget: int | None = None
    out: str | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        for name in ("k_range", "n_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo} > {hi}")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must fit in 64 bits")
        if self.samples < 0:
            raise ValueError("samples must be non-negative")

    def ks(self) -> range:
        return range(self.k_range[0], self.k_range[1] + 1)

    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)


@dataclass(frozen=True)
class VerificationRecord:
    params: dict[str, int]
    graph: str
    claim: str
    outcome: Outcome
    witness: str | None = None
    gap: str | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.outcome not in OUTCOMES:
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome == "counterexample-at-small-n" and "graph6=" not in self.graph:
            raise ValueError("counterexamples must carry a graph6 string")

    @property
    def graph6(self) -> str | None:
        for part in self.graph.split():
            if part.startswith("graph6="):
                return part[len("graph6="):]
        return None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


FIELDS = ["k", "n", "delta", "graph", "claim", "outcome", "witness", "gap"]


def records_csv(records: Sequence[VerificationRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        p = r.params
        w.writerow([p.get("k"), p.get("n"), p.get("delta"), r.graph, r.claim, r.outcome, r.witness or "", r.gap or ""])
    return buf.getvalue()


def records_json(records: Sequence[VerificationRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=1, default=str)
