"""Tightness checks for the extremal graphs and probes of sampled graphs."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from ..components import check_component_facts, ck_factor_exact, decompose
from ..errors import BudgetExceeded, PreconditionError
from ..extremal import build_G_c, build_G_p
from ..graphs import Graph, popcount, to_graph6
from ..graphs.coloring import partiteness_certificate
from ..powersearch.chromatic import power_cycle_chromatic
from ..powersearch.search import find_power_cycle, find_power_path, longest_power_path_exact
from ..thresholds import PowerParams, compute_profile, delta_range
from .generate import sample_min_degree_graphs
from .records import VerificationRecord

FIGURE1_HEADER = ["delta", "pp", "pc", "guess"]


def figure1_rows(k: int, n: int) -> list[tuple[int, int, int, int]]:
    """(δ, pp, pc, (k+1)(kδ−(k−1)n)) for each δ of the threshold table."""
    if n < k + 2:
        raise ValueError("need n ≥ k+2")
    rows = []
    for d in delta_range(k, n):
        prof = compute_profile(PowerParams(k, n, d))
        rows.append((d, prof.pp, prof.pc, (k + 1) * (k * d - (k - 1) * n)))
    return rows


def figure1_data(k: int, n: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIGURE1_HEADER)
    w.writerows(figure1_rows(k, n))
    return buf.getvalue()


def theorem_delta_range(k: int, n: int) -> range:
    """Integer δ with (k−1)n/k < δ < kn/(k+1)."""
    return range((k - 1) * n // k + 1, (k * n - 1) // (k + 1) + 1)


def chi_lengths(k: int, lo: int, hi: int) -> list[int]:
    """Lengths ℓ in [lo, hi] with ℓ ≥ k+1 and χ(C^k_ℓ) ≤ k+2."""
    return [ell for ell in range(max(lo, k + 1), hi + 1) if power_cycle_chromatic(k, ell) <= k + 2]


def verify_tightness(k: int, n: int, delta: int, budget: int | None = None) -> VerificationRecord:
    """Check that G_p and G_c attain, and do not beat, pp and pc.

    G_p: the longest k-th power of a path has exactly pp vertices.
    G_c: every C^k_ℓ with ℓ ≤ pc and χ ≤ k+2 is present, and none of the
    next k+1 such lengths (up to n) is.
    """
    params = PowerParams(k, n, delta)
    prof = compute_profile(params)
    tag = {"k": k, "n": n, "delta": delta}
    found = []
    try:
        gp, _ = build_G_p(params)
        w = longest_power_path_exact(gp, k, budget=budget)
        if len(w) != prof.pp:
            return VerificationRecord(
                tag, f"G_p graph6={to_graph6(gp)}", "tightness", "fail",
                witness=",".join(map(str, w.sequence)), gap=f"longest {len(w)} vs pp {prof.pp}",
            )
        gc, _ = build_G_c(params)
        for ell in chi_lengths(k, k + 1, prof.pc):
            if find_power_cycle(gc, k, ell, budget=budget) is None:
                return VerificationRecord(
                    tag, f"G_c graph6={to_graph6(gc)}", "tightness", "fail", gap=f"missing C^{k}_{ell} (pc {prof.pc})"
                )
            found.append(ell)
        above = chi_lengths(k, prof.pc + 1, n)[: k + 1]
        for ell in above:
            c = find_power_cycle(gc, k, ell, budget=budget)
            if c is not None:
                return VerificationRecord(
                    tag, f"G_c graph6={to_graph6(gc)}", "tightness", "fail",
                    witness=",".join(map(str, c.cycle)), gap=f"unexpected C^{k}_{ell} above pc {prof.pc}",
                )
    except BudgetExceeded as e:
        return VerificationRecord(tag, "G_p/G_c", "tightness", "budget", gap=f"{e.nodes} nodes")
    return VerificationRecord(
        tag, "G_p/G_c", "tightness", "pass",
        extra={"pp": prof.pp, "pc": prof.pc, "cycles": found, "absent": above},
    )


def _graph_sources(
    k: int, n: int, delta: int, samples: int, seed: int
) -> Iterable[tuple[str, Graph]]:
    params = PowerParams(k, n, delta)
    yield "G_p", build_G_p(params)[0]
    yield "G_c", build_G_c(params)[0]
    yield "K_n", Graph.complete(n)
    for i, g in enumerate(sample_min_degree_graphs(n, delta, samples, seed)):
        yield f"random seed={seed} index={i}", g


def probe_theorem(
    k: int,
    n_range: Sequence[int],
    delta_rule: Callable[[int, int], Iterable[int]] | None = None,
    samples: int = 10,
    budget: int | None = None,
    seed: int = 0,
) -> list[VerificationRecord]:
    """Look for P^k_pp in graphs with δ(G) ≥ δ.

    A miss is data rather than an error: the containment is only claimed
    for large n, so it is recorded as a small-n counterexample carrying the
    graph6 string needed to replay it.
    """
    rule = delta_rule or theorem_delta_range
    out = []
    for n in n_range:
        for delta in rule(k, n):
            pp = compute_profile(PowerParams(k, n, delta)).pp
            cell_seed = _mix(seed, k, n, delta)
            for name, g in _graph_sources(k, n, delta, samples, cell_seed):
                tag = {"k": k, "n": n, "delta": delta}
                desc = f"{name} graph6={to_graph6(g)}"
                try:
                    w = find_power_path(g, k, pp, budget=budget)
                except BudgetExceeded as e:
                    out.append(VerificationRecord(tag, desc, "P^k_pp", "budget", gap=f"{e.nodes} nodes"))
                    continue
                if w is None:
                    best = longest_power_path_exact(g, k, budget=budget)
                    out.append(VerificationRecord(
                        tag, desc, "P^k_pp", "counterexample-at-small-n",
                        witness=",".join(map(str, best.sequence)), gap=f"longest {len(best)} < pp {pp}",
                    ))
                else:
                    out.append(VerificationRecord(tag, desc, "P^k_pp", "pass", witness=",".join(map(str, w.sequence))))
    return out


def _mix(*parts: int) -> int:
    """Deterministic 64-bit seed from integers (splitmix-style)."""
    x = 0x9E3779B97F4A7C15
    for p in parts:
        x = (x ^ (p & (1 << 64) - 1)) * 0xBF58476D1CE4E5B9 & (1 << 64) - 1
        x ^= x >> 31
    return x


@dataclass
class StabilityReport:
    k: int
    n: int
    delta: int
    ck: int
    components: int
    interior: int
    interior_parts: list[int] | None
    exterior_sizes: list[int]
    pieces: list[int]
    pieces_connected: bool
    holds: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"CK = {self.ck}, components = {self.components}, |interior| = {self.interior}",
            f"exterior sizes = {self.exterior_sizes}",
        ]
        if self.interior_parts is not None:
            out.append(f"interior is {self.k - 1}-partite with parts {self.interior_parts}")
        out.append(f"holds: {', '.join(self.holds) or 'none'}")
        out += self.notes
        return out


def stability_probe(k: int, g: Graph, delta: int | None = None, budget: int | None = None) -> StabilityReport:
    """Which outcome of the stability trichotomy a concrete graph shows (advisory).

    C1: CK ≥ (k+1)(kδ−(k−1)n).  C2 is read with no slack, CK ≥ pp(n, δ).
    C3-like: the interior splits into k−1 independent sets whose removal
    leaves pieces each of whose K_k's lie in a single component; the size
    constant attached to the pieces is reported, not enforced.

    δ defaults to min(δ(g), ⌊kn/(k+1)⌋), the top of the range the
    trichotomy speaks about.
    """
    n = g.n
    if delta is None:
        delta = min(g.min_degree(), k * n // (k + 1))
    if delta > g.min_degree() or k * delta <= (k - 1) * n:
        raise PreconditionError("need δ(g) ≥ δ > (k−1)n/k")
    dec = decompose(g, k)
    ck = max((ck_factor_exact(g, dec, c.id, budget).size for c in dec.components), default=0)
    B = k * delta - (k - 1) * n
    intr = dec.interior
    parts = partiteness_certificate(g.induced(intr)[0], k - 1) if intr else None
    sub_parts = None if parts is None else [popcount(p) for p in parts]
    pieces = g.connected_components(g.vertex_mask & ~intr)
    connected = True
    for piece in pieces:
        ids = set()
        for i, cl in enumerate(dec.kcliques):
            if any(piece >> v & 1 for v in cl):
                ids.add(dec.component_of[i])
        connected &= len(ids) <= 1
    rep = StabilityReport(
        k, n, delta, ck, len(dec.components), popcount(intr), sub_parts,
        [popcount(c.exterior) for c in dec.components], sorted(popcount(p) for p in pieces), connected,
    )
    if ck >= (k + 1) * B:
        rep.holds.append("C1")
    if delta <= n - 1 and ck >= compute_profile(PowerParams(k, n, delta)).pp:
        rep.holds.append("C2")
    if intr and sub_parts is not None and connected:
        rep.holds.append("C3-like")
        cap = Fraction(19, 10) * B
        big = [popcount(p) for p in pieces if popcount(p) > cap]
        if big:
            rep.notes.append(f"pieces {big} exceed 19/10·(kδ−(k−1)n) = {float(cap):.2f} (constant is asymptotic)")
    facts = check_component_facts(g, dec, delta)
    if not facts.ok:
        rep.notes.append(f"component facts failed: {facts.failures()}")
    return rep


__all__ = [
    "FIGURE1_HEADER",
    "StabilityReport",
    "chi_lengths",
    "figure1_data",
    "figure1_rows",
    "probe_theorem",
    "stability_probe",
    "theorem_delta_range",
    "verify_tightness",
]
