"""Command-line harness: single seeding runs, repeated benchmarks with
summary statistics, and beta estimation.

Exit codes: 0 success, 2 usage/config/parse errors, 3 runtime algorithmic
errors (safety cap exceeded). The RSKPP_SAFETY_CAP environment variable
overrides the default per-draw safety cap. Output is machine-first (JSON
or CSV on stdout); --pretty switches to a human-readable table.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import RskppError, SafetyCapExceeded
from .ingest import IngestOptions, load
from .metrics import estimate_beta, summarize
from .model import DEFAULT_SAFETY_CAP, SeedingConfig, UNBOUNDED
from .seeding import Variant, preprocess, run_variant

BENCH_COLUMNS = [
    "dataset",
    "variant",
    "k",
    "m",
    "repeats",
    "mean_cost",
    "std_cost",
    "ci95_cost",
    "mean_seed_time_s",
    "mean_preprocess_time_s",
    "mean_fallback_count",
    "rng_seed",
]


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark cell: statistics over `repeats` runs of a variant."""

    dataset: str
    variant: str
    k: int
    m: int | None
    repeats: int
    mean_cost: float
    std_cost: float
    ci95_cost: float
    mean_seed_time_s: float
    mean_preprocess_time_s: float
    mean_fallback_count: float
    rng_seed: int

    def row(self) -> list:
        return [
            self.dataset,
            self.variant,
            self.k,
            "UNBOUNDED" if self.m is UNBOUNDED else self.m,
            self.repeats,
            repr(self.mean_cost),
            repr(self.std_cost),
            repr(self.ci95_cost),
            repr(self.mean_seed_time_s),
            repr(self.mean_preprocess_time_s),
            repr(self.mean_fallback_count),
            self.rng_seed,
        ]


def _default_safety_cap() -> int:
    return int(os.environ.get("RSKPP_SAFETY_CAP", DEFAULT_SAFETY_CAP))


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="dataset file path")
    p.add_argument("--format", choices=["csv", "libsvm"], default="csv")
    p.add_argument("--skip-header", action="store_true")
    p.add_argument("--drop-col", type=int, action="append", default=[], metavar="N")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--seed", type=int, required=True, help="base RNG seed")


def _add_config_flags(p: argparse.ArgumentParser, variant_append: bool = False) -> None:
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--m", type=int, default=None, help="rejection-round budget per draw")
    group.add_argument("--unbounded", action="store_true", help="no round budget (safety-capped)")
    p.add_argument("--scale-ln-k", action="store_true", help="scale the budget by c_mult*ln(k)")
    p.add_argument("--c-mult", type=float, default=1.0)
    choices = [v.value for v in Variant]
    if variant_append:
        p.add_argument("--variant", choices=choices, action="append", default=None)
    else:
        p.add_argument("--variant", choices=choices, default="rs")
    p.add_argument("--delta", type=float, default=0.0, help="mixture weight for the delta variant")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rskpp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_seed = sub.add_parser("seed", help="run one seeding and print the result as JSON")
    _add_input_flags(p_seed)
    _add_config_flags(p_seed)
    p_seed.add_argument(
        "--zero-timings",
        action="store_true",
        help="report timing fields as 0.0 for byte-reproducible output",
    )
    p_seed.add_argument("--pretty", action="store_true")

    p_bench = sub.add_parser("bench", help="repeated runs over a (k, m, variant) grid, CSV output")
    _add_input_flags(p_bench)
    # --variant is repeatable here so one invocation can emit an m-sweep
    # plus an exact-baseline row in the same CSV.
    _add_config_flags(p_bench, variant_append=True)
    p_bench.add_argument("--repeats", type=int, default=20)
    p_bench.add_argument("--k-list", default=None, help="comma-separated k sweep, e.g. 5,10,20")
    p_bench.add_argument("--m-list", default=None, help="comma-separated m sweep; 'unbounded' allowed")
    p_bench.add_argument("--name", default=None, help="dataset name for the output rows")
    p_bench.add_argument("--pretty", action="store_true")

    p_beta = sub.add_parser("estimate-beta", help="variance / mean unbounded seeding cost")
    _add_input_flags(p_beta)
    p_beta.add_argument("--k", type=int, required=True)
    p_beta.add_argument("--repeats", type=int, default=20)

    return parser


def _load_and_preprocess(args):
    opts = IngestOptions(
        format=args.format,
        skip_header=args.skip_header,
        drop_columns=tuple(args.drop_col),
        delimiter=args.delimiter,
    )
    matrix, _nnz = load(args.input, opts)
    return preprocess(matrix)


def _budget_from_args(args) -> int | None:
    if args.unbounded:
        return UNBOUNDED
    return args.m


def cmd_seed(args) -> int:
    prep = _load_and_preprocess(args)
    cfg = SeedingConfig(
        k=args.k,
        m=_budget_from_args(args),
        c_mult=args.c_mult,
        scale_by_ln_k=args.scale_ln_k,
        delta=args.delta,
        rng_seed=args.seed,
        safety_cap=_default_safety_cap(),
    )
    result = run_variant(
        Variant(args.variant),
        prep.data,
        cfg,
        rng=np.random.default_rng(cfg.rng_seed),
        tree=prep.tree,
        preprocess_time_s=prep.elapsed_s,
    )
    if args.pretty:
        print(f"variant={args.variant} k={cfg.k} cost={result.cost:.6g}")
        print(f"centers: {result.centers}")
        print(
            f"preprocess {result.preprocess_time_s:.4f}s, seeding {result.seeding_time_s:.4f}s, "
            f"fallbacks {result.fallback_count}, rounds {result.total_rejection_rounds}"
        )
    else:
        print(result.to_json(zero_timings=args.zero_timings))
    return 0


def _parse_int_list(text: str | None, fallback) -> list:
    if text is None:
        return [fallback]
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(UNBOUNDED if tok.lower() == "unbounded" else int(tok))
    return out


def bench_records(args) -> list[BenchRecord]:
    prep = _load_and_preprocess(args)
    name = args.name or Path(args.input).stem
    if args.repeats < 1:
        raise ValueError("repeats must be >= 1")
    if args.repeats == 1:
        print("warning: repeats=1, std and CI are reported as 0", file=sys.stderr)

    variants = list(args.variant or ["rs"])
    k_list = _parse_int_list(args.k_list, args.k)
    m_list = _parse_int_list(args.m_list, _budget_from_args(args))

    records = []
    for variant in variants:
        variant = Variant(variant)
        budgets = m_list if variant is Variant.RS else [UNBOUNDED]
        for k in k_list:
            for m in budgets:
                cfg = SeedingConfig(
                    k=k,
                    m=m,
                    c_mult=args.c_mult,
                    scale_by_ln_k=args.scale_ln_k,
                    delta=args.delta,
                    rng_seed=args.seed,
                    safety_cap=_default_safety_cap(),
                )
                costs, times, falls = [], [], []
                for r in range(args.repeats):
                    rng = np.random.default_rng(args.seed ^ r)
                    res = run_variant(variant, prep.data, cfg, rng=rng, tree=prep.tree)
                    costs.append(res.cost)
                    times.append(res.seeding_time_s)
                    falls.append(res.fallback_count)
                if args.repeats >= 2:
                    stats = summarize(costs)
                    mean_cost, std_cost, ci = stats.mean, stats.std, stats.ci95_half_width
                else:
                    mean_cost, std_cost, ci = costs[0], 0.0, 0.0
                records.append(
                    BenchRecord(
                        dataset=name,
                        variant=variant.value,
                        k=k,
                        m=m,
                        repeats=args.repeats,
                        mean_cost=mean_cost,
                        std_cost=std_cost,
                        ci95_cost=ci,
                        mean_seed_time_s=float(np.mean(times)),
                        mean_preprocess_time_s=prep.elapsed_s,
                        mean_fallback_count=float(np.mean(falls)),
                        rng_seed=args.seed,
                    )
                )
    return records


def cmd_bench(args) -> int:
    records = bench_records(args)
    if args.pretty:
        widths = [max(len(c), 12) for c in BENCH_COLUMNS]
        print("  ".join(c.ljust(w) for c, w in zip(BENCH_COLUMNS, widths)))
        for rec in records:
            print("  ".join(str(v).ljust(w) for v, w in zip(rec.row(), widths)))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(BENCH_COLUMNS)
        for rec in records:
            writer.writerow(rec.row())
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_estimate_beta(args) -> int:
    prep = _load_and_preprocess(args)
    rng = np.random.default_rng(args.seed)
    beta = estimate_beta(prep.data, args.k, args.repeats, rng=rng, tree=prep.tree)
    delta1 = prep.data.total_sq_norm
    print(
        json.dumps(
            {
                "beta": beta,
                "delta1": delta1,
                "mean_cost": delta1 / beta,
                "repeats": args.repeats,
            },
            separators=(",", ":"),
        )
    )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"seed": cmd_seed, "bench": cmd_bench, "estimate-beta": cmd_estimate_beta}
    try:
        return handlers[args.command](args)
    except SafetyCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RskppError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
