"""Threshold functions for the longest k-th power of a path or cycle.

Given k, n and a minimum degree δ with (k−1)n/k < δ ≤ n−1, write

    A = (k−1)δ − (k−2)n      (vertices left after removing k−1 sets of size n−δ)
    B = kδ − (k−1)n          (the "excess" that every clique must beat)

r_p is the largest r with ⌊A/r⌋ > B and r_c the largest with ⌈A/r⌉ > B.
From these, s = ⌈A/r⌉ is the size of the largest of r balanced cliques on A
vertices, and

    pp = min{(k−1)(⌊s_p/2⌋+1) + s_p, n},   pc = min{(k−1)⌊s_c/2⌋ + s_c, n}.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from typing import Literal

from .errors import DomainError

Variant = Literal["path", "cycle"]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class PowerParams:
    k: int
    n: int
    delta: int

    def __post_init__(self) -> None:
        k, n, d = self.k, self.n, self.delta
        if k < 2:
            raise DomainError(f"k must be at least 2, got {k}")
        if n < k + 2:
            raise DomainError(f"n must be at least k+2 = {k + 2}, got {n}")
        # (k-1)n/k < δ  <=>  kδ > (k-1)n
        if not (k * d > (k - 1) * n and d <= n - 1):
            raise DomainError(f"δ={d} outside ((k−1)n/k, n−1] for k={k}, n={n}")

    @property
    def A(self) -> int:
        return (self.k - 1) * self.delta - (self.k - 2) * self.n

    @property
    def B(self) -> int:
        return self.k * self.delta - (self.k - 1) * self.n


@dataclass(frozen=True)
class ThresholdProfile:
    r_p: int
    r_c: int
    s_p: int
    s_c: int
    pp: int
    pc: int


def compute_r(params: PowerParams, variant: Variant) -> int:
    """Largest r satisfying the floor (path) or ceiling (cycle) predicate.

    The predicate only weakens as r grows, so the scan stops at the first r
    where it fails.  r = 1 always qualifies because A > B on the domain.
    """
    A, B = params.A, params.B
    if variant == "path":
        holds = lambda r: A // r > B  # noqa: E731
    elif variant == "cycle":
        holds = lambda r: _ceil_div(A, r) > B  # noqa: E731
    else:
        raise ValueError(f"unknown variant {variant!r}")
    r = 1
    while holds(r + 1):
        r += 1
    return r


def validate_r_inequalities(params: PowerParams) -> bool:
    """Check the two sandwich inequalities that pin down r_p.

    (n−δ−1)/(B+1) < r_p ≤ A/(B+1), and with r = r_p,
    ([(k−1)r+1]n − (r+1))/(kr+1) < δ ≤ ([(k−1)(r−1)+1]n − r)/(k(r−1)+1).
    """
    k, n, d = params.k, params.n, params.delta
    A, B = params.A, params.B
    r = compute_r(params, "path")
    first = (n - d - 1) < r * (B + 1) and r * (B + 1) <= A
    lo_num = ((k - 1) * r + 1) * n - (r + 1)
    hi_num = ((k - 1) * (r - 1) + 1) * n - r
    second = lo_num < d * (k * r + 1) and d * (k * (r - 1) + 1) <= hi_num
    return first and second


def compute_profile(params: PowerParams) -> ThresholdProfile:
    A, n, k = params.A, params.n, params.k
    r_p = compute_r(params, "path")
    r_c = compute_r(params, "cycle")
    s_p = _ceil_div(A, r_p)
    s_c = _ceil_div(A, r_c)
    pp = min((k - 1) * (s_p // 2 + 1) + s_p, n)
    pc = min((k - 1) * (s_c // 2) + s_c, n)
    prof = ThresholdProfile(r_p, r_c, s_p, s_c, pp, pc)
    assert validate_r_inequalities(params)
    assert r_c >= r_p and pc <= pp <= n
    return prof


def pp_raw(params: PowerParams) -> int:
    """pp before the cap at n."""
    s = compute_profile(params).s_p
    return (params.k - 1) * (s // 2 + 1) + s


def delta_range(k: int, n: int, full: bool = False) -> range:
    """Integer δ covered by the threshold table.

    By default the table stops at ⌊kn/(k+1)⌋, the top of the range where the
    extremal constructions are the relevant ones; ``full`` runs to n−1.
    """
    lo = (k - 1) * n // k + 1
    hi = n - 1 if full else k * n // (k + 1)
    return range(lo, hi + 1)


def threshold_table(k: int, n: int, full: bool = False) -> list[tuple[int, ThresholdProfile]]:
    if n < k + 2:
        raise DomainError(f"n must be at least k+2 = {k + 2}")
    return [(d, compute_profile(PowerParams(k, n, d))) for d in delta_range(k, n, full)]


CSV_HEADER = ["k", "n", "delta", "r_p", "r_c", "s_p", "s_c", "pp", "pc"]


def table_csv(k: int, n: int, full: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for d, prof in threshold_table(k, n, full):
        row = asdict(prof)
        w.writerow([k, n, d] + [row[c] for c in CSV_HEADER[3:]])
    return buf.getvalue()
