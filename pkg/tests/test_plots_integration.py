"""End-to-end: the bench CSV emitted by the CLI feeds the plotting frontend
through its script interface only (no shared in-process state)."""

import subprocess
import sys
from pathlib import Path

import numpy as np

from rskpp import planted_gaussians, write_csv
from rskpp.cli import main

TRADEOFF_SCRIPT = Path(__file__).resolve().parents[1] / "plots" / "tradeoff"


def make_bench_csv(tmp_path, capsys, with_baseline=True):
    pts, _, _ = planted_gaussians(400, 5, 2, separation=7.0, rng=np.random.default_rng(0))
    data_path = tmp_path / "planted.csv"
    write_csv(data_path, pts)
    args = [
        "bench", "--input", str(data_path), "--k", "5",
        "--m-list", "5,10,20,50,75,100,125,150",
        "--seed", "3", "--repeats", "5",
    ]
    if with_baseline:
        args += ["--variant", "rs", "--variant", "exact"]
    code = main(args)
    out = capsys.readouterr().out
    assert code == 0
    bench_path = tmp_path / "bench.csv"
    bench_path.write_text(out)
    return bench_path


def test_acceptance_secondary_plot_generation(tmp_path, capsys):
    """[SECONDARY] 8-point m-sweep plus baseline renders an image with 8
    series points; a missing baseline yields MISSING_BASELINE."""
    bench_path = make_bench_csv(tmp_path, capsys, with_baseline=True)
    image_path = tmp_path / "tradeoff.svg"
    result = subprocess.run(
        [sys.executable, str(TRADEOFF_SCRIPT), str(bench_path), str(image_path)],
        capture_output=True, text=True,
    )
    assert result.returncode == 0, result.stderr
    assert "8 sweep points" in result.stdout
    assert image_path.exists() and image_path.stat().st_size > 0
    svg = image_path.read_text()
    for m in (5, 10, 20, 50, 75, 100, 125, 150):
        assert f"m={m}" in svg

    no_baseline = make_bench_csv(tmp_path, capsys, with_baseline=False)
    result = subprocess.run(
        [sys.executable, str(TRADEOFF_SCRIPT), str(no_baseline), str(tmp_path / "x.png")],
        capture_output=True, text=True,
    )
    assert result.returncode == 2
    assert "MISSING_BASELINE" in result.stderr
    print("ACCEPTANCE plot generation (secondary): PASS")
