"""Campaigns: grids of independent cells run on a process pool, merged in cell order."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

from ..components import check_component_facts, decompose
from ..graphs import to_graph6
from ..thresholds import PowerParams
from ..extremal import build_G_c, build_G_p
from .generate import sample_min_degree_graphs
from .records import CampaignConfig, VerificationRecord
from .verify import _mix, probe_theorem, theorem_delta_range, verify_tightness

T = TypeVar("T")
R = TypeVar("R")


def run_cells(fn: Callable[[T], R], cells: Sequence[T], workers: int = 1) -> list[R]:
    """Apply fn to every cell; results come back in cell order whatever the pool does."""
    if workers <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells, chunksize=max(1, len(cells) // (4 * workers))))


def _flatten(chunks: Iterable[list[VerificationRecord]]) -> list[VerificationRecord]:
    return [r for chunk in chunks for r in chunk]


def _tightness_cell(cell: tuple[int, int, int, int | None]) -> VerificationRecord:
    k, n, d, budget = cell
    return verify_tightness(k, n, d, budget)


def tightness_campaign(cfg: CampaignConfig) -> list[VerificationRecord]:
    cells = [(k, n, d, cfg.budget) for k in cfg.ks() for n in cfg.ns() if n >= k + 2 for d in theorem_delta_range(k, n)]
    return run_cells(_tightness_cell, cells, cfg.workers)


def _probe_cell(cell: tuple[int, int, int, int, int | None]) -> list[VerificationRecord]:
    k, n, samples, seed, budget = cell
    return probe_theorem(k, [n], samples=samples, budget=budget, seed=seed)


def probe_campaign(cfg: CampaignConfig) -> list[VerificationRecord]:
    cells = [(k, n, cfg.samples, cfg.seed, cfg.budget) for k in cfg.ks() for n in cfg.ns() if n >= k + 2]
    return _flatten(run_cells(_probe_cell, cells, cfg.workers))


def _facts_cell(cell: tuple[int, int, int, int]) -> list[VerificationRecord]:
    k, n, samples, seed = cell
    out = []
    for d in theorem_delta_range(k, n):
        tag = {"k": k, "n": n, "delta": d}
        graphs = [("G_p", build_G_p(PowerParams(k, n, d))[0]), ("G_c", build_G_c(PowerParams(k, n, d))[0])]
        s = _mix(seed, k, n, d)
        graphs += [(f"random seed={s} index={i}", g) for i, g in enumerate(sample_min_degree_graphs(n, d, samples, s))]
        for name, g in graphs:
            dec = decompose(g, k)
            rep = check_component_facts(g, dec, g.min_degree())
            out.append(VerificationRecord(
                tag, f"{name} graph6={to_graph6(g)}", "component facts", "pass" if rep.ok else "fail",
                gap=None if rep.ok else "; ".join(rep.lines()),
                extra={"components": len(dec.components)},
            ))
    return out


def facts_campaign(cfg: CampaignConfig) -> list[VerificationRecord]:
    cells = [(k, n, cfg.samples, cfg.seed) for k in cfg.ks() for n in cfg.ns() if n >= k + 2]
    return _flatten(run_cells(_facts_cell, cells, cfg.workers))
