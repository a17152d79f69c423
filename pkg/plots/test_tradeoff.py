"""Tests for the trade-off plot frontend. These exercise the CSV contract
directly with hand-written rows; the seeding library is never imported."""

import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from tradeoff import MalformedCsv, MissingBaseline, main, parse_bench_csv, render_tradeoff

HEADER = (
    "dataset,variant,k,m,repeats,mean_cost,std_cost,ci95_cost,"
    "mean_seed_time_s,mean_preprocess_time_s,mean_fallback_count,rng_seed"
)

SWEEP_M = [5, 10, 20, 50, 75, 100, 125, 150]


def sweep_csv(tmp_path, baseline=True, name="bench.csv", shuffle=False):
    rows = []
    ms = list(reversed(SWEEP_M)) if shuffle else SWEEP_M
    for i, m in enumerate(ms):
        cost = 9e6 - 1e4 * m
        rows.append(f"planted,rs,10,{m},40,{cost},3e5,9e4,{0.1 + 0.002 * m},0.5,1.0,11")
    if baseline:
        rows.append("planted,exact,10,UNBOUNDED,40,7.4e6,2.8e5,8.5e4,2.0,0.5,0.0,11")
    path = tmp_path / name
    path.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
    return path


class TestParse:
    def test_series_shape_and_order(self, tmp_path):
        series = parse_bench_csv(sweep_csv(tmp_path, shuffle=True))
        assert series.m_values == tuple(SWEEP_M)  # sorted even if rows were not
        assert len(series.mean_costs) == len(series.ci95) == len(series.mean_times) == 8
        assert all(a < b for a, b in zip(series.m_values, series.m_values[1:]))
        assert series.baseline_mean == pytest.approx(7.4e6)

    def test_parsing_is_pure(self, tmp_path):
        path = sweep_csv(tmp_path)
        assert parse_bench_csv(path) == parse_bench_csv(path)

    def test_missing_baseline(self, tmp_path):
        with pytest.raises(MissingBaseline):
            parse_bench_csv(sweep_csv(tmp_path, baseline=False))

    def test_stale_baseline_for_other_k_is_missing(self, tmp_path):
        path = sweep_csv(tmp_path, baseline=False)
        with open(path, "a") as fh:
            fh.write("planted,exact,99,UNBOUNDED,40,7.4e6,2.8e5,8.5e4,2.0,0.5,0.0,11\n")
        with pytest.raises(MissingBaseline):
            parse_bench_csv(path)

    def test_malformed_missing_columns(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("dataset,variant\nplanted,rs\n")
        with pytest.raises(MalformedCsv):
            parse_bench_csv(path)

    def test_malformed_no_sweep_rows(self, tmp_path):
        path = tmp_path / "nosweep.csv"
        path.write_text(HEADER + "\nplanted,exact,10,UNBOUNDED,40,7e6,1e5,5e4,2.0,0.5,0.0,11\n")
        with pytest.raises(MalformedCsv):
            parse_bench_csv(path)

    def test_malformed_duplicate_m(self, tmp_path):
        path = tmp_path / "dup.csv"
        rows = ["planted,rs,10,5,40,8e6,1e5,5e4,0.1,0.5,1.0,11"] * 2
        rows.append("planted,exact,10,UNBOUNDED,40,7e6,1e5,5e4,2.0,0.5,0.0,11")
        path.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
        with pytest.raises(MalformedCsv):
            parse_bench_csv(path)

    def test_malformed_nonnumeric_cell(self, tmp_path):
        path = tmp_path / "nan.csv"
        path.write_text(HEADER + "\nplanted,rs,10,5,40,oops,1e5,5e4,0.1,0.5,1.0,11\n")
        with pytest.raises(MalformedCsv):
            parse_bench_csv(path)


class TestRender:
    def test_renders_png_with_eight_points(self, tmp_path):
        out = tmp_path / "plot.png"
        series = render_tradeoff(sweep_csv(tmp_path), out)
        assert out.exists() and out.stat().st_size > 0
        assert len(series.m_values) == 8

    def test_renders_svg_with_series_markers(self, tmp_path):
        out = tmp_path / "plot.svg"
        series = render_tradeoff(sweep_csv(tmp_path), out, dataset_label="Planted")
        assert len(series.m_values) == 8
        text = out.read_text()
        # every sweep point is annotated in the vector output
        for m in SWEEP_M:
            assert f"m={m}" in text

    def test_curve_ends_inside_baseline_band(self, tmp_path):
        # generated so the largest-m cost lands within the baseline CI
        path = tmp_path / "conv.csv"
        rows = [f"planted,rs,10,{m},40,{7.4e6 + 4e6 / m},1e5,5e4,{0.1 + 0.001 * m},0.5,1.0,3" for m in SWEEP_M]
        rows.append("planted,exact,10,UNBOUNDED,40,7.41e6,1e5,5e4,1.0,0.5,0.0,3")
        path.write_text(HEADER + "\n" + "\n".join(rows) + "\n")
        series = render_tradeoff(path, tmp_path / "conv.png")
        final_cost = series.mean_costs[-1]
        assert abs(final_cost - series.baseline_mean) <= series.baseline_ci95


class TestCli:
    def test_main_success(self, tmp_path, capsys):
        out = tmp_path / "cli.png"
        code = main([str(sweep_csv(tmp_path)), str(out)])
        assert code == 0
        assert "8 sweep points" in capsys.readouterr().out

    def test_main_missing_baseline_exit(self, tmp_path, capsys):
        code = main([str(sweep_csv(tmp_path, baseline=False)), str(tmp_path / "x.png")])
        assert code == 2
        assert "MISSING_BASELINE" in capsys.readouterr().err

    def test_main_bad_extension(self, tmp_path, capsys):
        code = main([str(sweep_csv(tmp_path)), str(tmp_path / "x.pdf")])
        assert code == 2

    def test_executable_wrapper(self, tmp_path):
        out = tmp_path / "wrapped.svg"
        script = Path(__file__).resolve().parent / "tradeoff"
        result = subprocess.run(
            [sys.executable, str(script), str(sweep_csv(tmp_path)), str(out), "--title", "T"],
            capture_output=True,
        )
        assert result.returncode == 0, result.stderr
        assert out.exists() and out.stat().st_size > 0
