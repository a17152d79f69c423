"""Render the cost-vs-time trade-off figure from a benchmark CSV.

Consumes only the public bench CSV contract (columns: dataset, variant, k,
m, repeats, mean_cost, std_cost, ci95_cost, mean_seed_time_s,
mean_preprocess_time_s, mean_fallback_count, rng_seed). The sweep rows are
the `rs` rows with finite m; the baseline is the `exact` row for the same
dataset and k, drawn as a horizontal reference with its own confidence
band. No in-process coupling with the seeding library.

Usage: tradeoff <bench.csv> <out.(png|svg)> [--title STR]
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

REQUIRED_COLUMNS = {
    "dataset",
    "variant",
    "k",
    "m",
    "mean_cost",
    "ci95_cost",
    "mean_seed_time_s",
}


class MissingBaseline(Exception):
    code = "MISSING_BASELINE"


class MalformedCsv(Exception):
    code = "MALFORMED_CSV"


@dataclass(frozen=True)
class TradeoffSeries:
    """One m-sweep plus its baseline, ready to plot.

    All per-point lists have equal length and m_values is strictly
    increasing."""

    dataset: str
    k: int
    m_values: tuple[int, ...]
    mean_costs: tuple[float, ...]
    ci95: tuple[float, ...]
    mean_times: tuple[float, ...]
    baseline_mean: float
    baseline_ci95: float


def parse_bench_csv(path) -> TradeoffSeries:
    """Extract the sweep and baseline from a bench CSV; raise MalformedCsv
    or MissingBaseline when the contract is not met."""
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or not REQUIRED_COLUMNS <= set(reader.fieldnames):
                raise MalformedCsv(f"missing required columns in {path}")
            rows = list(reader)
    except OSError as exc:
        raise MalformedCsv(str(exc)) from exc
    if not rows:
        raise MalformedCsv("no data rows")

    sweep = []
    for row in rows:
        if row["variant"] != "rs" or row["m"].upper() == "UNBOUNDED":
            continue
        try:
            sweep.append(
                (
                    int(row["m"]),
                    float(row["mean_cost"]),
                    float(row["ci95_cost"]),
                    float(row["mean_seed_time_s"]),
                    row["dataset"],
                    int(row["k"]),
                )
            )
        except ValueError as exc:
            raise MalformedCsv(f"bad sweep row {row!r}") from exc
    if not sweep:
        raise MalformedCsv("no bounded-m sweep rows (variant=rs)")

    datasets = {s[4] for s in sweep}
    ks = {s[5] for s in sweep}
    if len(datasets) > 1 or len(ks) > 1:
        raise MalformedCsv(f"ambiguous sweep: datasets {datasets}, k values {ks}")
    dataset, k = sweep[0][4], sweep[0][5]

    sweep.sort(key=lambda s: s[0])
    m_values = tuple(s[0] for s in sweep)
    if len(set(m_values)) != len(m_values):
        raise MalformedCsv(f"duplicate m values in sweep: {m_values}")

    baseline = None
    for row in rows:
        if row["variant"] == "exact" and row["dataset"] == dataset and int(row["k"]) == k:
            try:
                baseline = (float(row["mean_cost"]), float(row["ci95_cost"]))
            except ValueError as exc:
                raise MalformedCsv(f"bad baseline row {row!r}") from exc
            break
    if baseline is None:
        raise MissingBaseline(f"no exact-variant baseline row for dataset={dataset!r}, k={k}")

    return TradeoffSeries(
        dataset=dataset,
        k=k,
        m_values=m_values,
        mean_costs=tuple(s[1] for s in sweep),
        ci95=tuple(s[2] for s in sweep),
        mean_times=tuple(s[3] for s in sweep),
        baseline_mean=baseline[0],
        baseline_ci95=baseline[1],
    )


def render_tradeoff(bench_csv_path, output_image_path, dataset_label: str | None = None) -> TradeoffSeries:
    """Plot mean cost vs mean seeding time with 95% CI bars and the exact
    baseline band; returns the plotted series."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    series = parse_bench_csv(bench_csv_path)
    label = dataset_label or f"{series.dataset} (k={series.k})"

    fig, ax = plt.subplots(figsize=(7, 5))
    ax.errorbar(
        series.mean_times,
        series.mean_costs,
        yerr=series.ci95,
        marker="o",
        capsize=3,
        label="rejection-sampling seeding",
    )
    for m, x, y in zip(series.m_values, series.mean_times, series.mean_costs):
        ax.annotate(f"m={m}", (x, y), textcoords="offset points", xytext=(5, 5), fontsize=8)
    ax.axhline(series.baseline_mean, color="tab:red", linestyle="--", label="exact seeding baseline")
    ax.axhspan(
        series.baseline_mean - series.baseline_ci95,
        series.baseline_mean + series.baseline_ci95,
        color="tab:red",
        alpha=0.15,
    )
    ax.set_xlabel("mean seeding time (s)")
    ax.set_ylabel("mean clustering cost")
    ax.set_title(label)
    ax.legend()
    fig.tight_layout()
    fig.savefig(output_image_path)
    plt.close(fig)
    return series


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="tradeoff", description=__doc__)
    parser.add_argument("bench_csv", help="benchmark CSV produced by the seeding harness")
    parser.add_argument("output", help="output image path (.png or .svg)")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)
    if Path(args.output).suffix.lower() not in {".png", ".svg"}:
        print("error: output must end in .png or .svg", file=sys.stderr)
        return 2
    try:
        series = render_tradeoff(args.bench_csv, args.output, dataset_label=args.title)
    except (MissingBaseline, MalformedCsv) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.output} ({len(series.m_values)} sweep points)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
