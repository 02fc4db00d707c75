"""Command-line entry point.

Graphs flow as graph6 lines on stdin/stdout; tables and records go out as
CSV (default) or JSON.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict
from typing import Sequence

from .components import ck_factor_exact, decompose
from .components.factors import greedy_packing
from .errors import BudgetExceeded, DomainError, PreconditionError
from .extremal import build_G_c, build_G_p, construct_longest_power_path
from .graphs import from_graph6, popcount, to_graph6
from .harness import (
    CampaignConfig,
    enumerate_small_graphs,
    figure1_rows,
    probe_campaign,
    records_csv,
    records_json,
    tightness_campaign,
    verify_tightness,
)
from .powersearch import find_power_cycle, find_power_path, longest_power_path_exact
from .thresholds import CSV_HEADER, PowerParams, threshold_table


def _emit(rows: list[dict], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=1, default=str)
        out.write("\n")
        return
    if not rows:
        return
    w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)


def _read_graphs(path: str | None) -> list:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return [from_graph6(line) for line in text.split() if line.strip()]


def _range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    return int(lo), int(hi or lo)


def cmd_thresholds(a: argparse.Namespace) -> int:
    rows = []
    for d, prof in threshold_table(a.k, a.n, full=a.full):
        row = {"k": a.k, "n": a.n, "delta": d, **asdict(prof)}
        rows.append({c: row[c] for c in CSV_HEADER})
    _emit(rows, a.out, sys.stdout)
    return 0


def cmd_figure1(a: argparse.Namespace) -> int:
    rows = [dict(zip(("delta", "pp", "pc", "guess"), r)) for r in figure1_rows(a.k, a.n)]
    _emit(rows, a.out, sys.stdout)
    return 0


def cmd_extremal(a: argparse.Namespace) -> int:
    params = PowerParams(a.k, a.n, a.delta)
    g, layout = (build_G_p if a.variant == "p" else build_G_c)(params)
    print(to_graph6(g))
    if a.path and a.variant == "p":
        w = construct_longest_power_path(g, layout, a.k)
        print(" ".join(map(str, w.sequence)), file=sys.stderr)
    return 0


def cmd_components(a: argparse.Namespace) -> int:
    rows = []
    for gi, g in enumerate(_read_graphs(a.input)):
        dec = decompose(g, a.k)
        for c in dec.components:
            row = {
                "graph": gi,
                "id": c.id,
                "size": c.size,
                "interior": popcount(c.vertices & dec.interior),
                "exterior": popcount(c.exterior),
            }
            if a.factor == "exact":
                row["factor"] = ck_factor_exact(g, dec, c.id, a.budget).size
            elif a.factor == "greedy":
                row["factor"] = greedy_packing(g, dec, c.id).size
            rows.append(row)
    _emit(rows, a.out, sys.stdout)
    return 0


def _mode(words: list[str]) -> tuple[str, int | None]:
    if words == ["longest-path"]:
        return "longest-path", None
    if len(words) == 2 and words[0] in ("cycle", "path") and words[1].isdigit():
        return words[0], int(words[1])
    raise ValueError("--mode is longest-path, path LEN or cycle LEN")


def cmd_search(a: argparse.Namespace) -> int:
    mode, ell = _mode(a.mode)
    rows = []
    for gi, g in enumerate(_read_graphs(a.input)):
        if mode == "cycle":
            w = find_power_cycle(g, a.k, ell, a.budget)
            seq = None if w is None else w.cycle
        elif mode == "longest-path":
            seq = longest_power_path_exact(g, a.k, a.budget).sequence
        else:
            p = find_power_path(g, a.k, ell, a.budget)
            seq = None if p is None else p.sequence
        rows.append({
            "graph": gi,
            "length": 0 if seq is None else len(seq),
            "found": seq is not None,
            "witness": "" if seq is None else " ".join(map(str, seq)),
        })
    _emit(rows, a.out, sys.stdout)
    return 0


def _write_records(records: list, fmt: str) -> None:
    sys.stdout.write(records_json(records) + "\n" if fmt == "json" else records_csv(records))


def cmd_verify(a: argparse.Namespace) -> int:
    if a.delta is not None:
        recs = [verify_tightness(a.k, a.n, a.delta, a.budget)]
    else:
        cfg = CampaignConfig(_range(a.k_range or str(a.k)), _range(a.n_range or str(a.n)),
                             seed=a.seed, budget=a.budget, workers=a.workers)
        recs = tightness_campaign(cfg)
    _write_records(recs, a.out)
    return 0 if all(r.outcome == "pass" for r in recs) else 1


def cmd_probe(a: argparse.Namespace) -> int:
    cfg = CampaignConfig(_range(a.k_range), _range(a.n_range), samples=a.samples,
                         seed=a.seed, budget=a.budget, workers=a.workers)
    _write_records(probe_campaign(cfg), a.out)
    return 0


def cmd_enumerate(a: argparse.Namespace) -> int:
    for g in enumerate_small_graphs(a.n, a.min_degree):
        print(to_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="node budget per oracle call")
    common.add_argument("--out", choices=("csv", "json"), default="csv")

    p = argparse.ArgumentParser(prog="kpowers", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("thresholds", parents=[common], help="r, s, pp, pc per δ")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--full", action="store_true", help="run δ up to n−1")
    s.set_defaults(fn=cmd_thresholds)

    s = sub.add_parser("figure1", parents=[common], help="pp, pc and the naive guess per δ")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_figure1)

    s = sub.add_parser("extremal", parents=[common], help="print G_p or G_c as graph6")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--variant", choices=("p", "c"), default="p")
    s.add_argument("--path", action="store_true", help="also print a longest power path to stderr")
    s.set_defaults(fn=cmd_extremal)

    s = sub.add_parser("components", parents=[common], help="K_{k+1}-component table")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--in", dest="input", default=None, help="graph6 file (default stdin)")
    s.add_argument("--factor", choices=("exact", "greedy"), default=None)
    s.set_defaults(fn=cmd_components)

    s = sub.add_parser("search", parents=[common], help="power path/cycle search")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", nargs="+", default=["longest-path"], metavar="MODE",
                   help="longest-path (default), path LEN or cycle LEN")
    s.add_argument("--in", dest="input", default=None)
    s.set_defaults(fn=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="tightness of the extremal graphs")
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--n", type=int, default=20)
    s.add_argument("--delta", type=int, default=None)
    s.add_argument("--k-range", default=None, help="e.g. 2-3")
    s.add_argument("--n-range", default=None, help="e.g. 5-18")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("probe", parents=[common], help="look for P^k_pp in sampled graphs")
    s.add_argument("--k-range", default="3")
    s.add_argument("--n-range", default="8-12")
    s.add_argument("--samples", type=int, default=10)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(fn=cmd_probe)

    s = sub.add_parser("enumerate", parents=[common], help="all small graphs with a minimum degree")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--min-degree", type=int, default=0)
    s.set_defaults(fn=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (DomainError, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
