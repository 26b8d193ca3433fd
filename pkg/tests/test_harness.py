import json
import math
import os
import subprocess
import sys

import pytest

from triginterp.cli import main as cli_main
from triginterp.harness import (CSV_COLUMNS, ConfigError, DeltaRule,
                                ExperimentConfig, emit_gnuplot_data,
                                emit_report, report_to_csv, report_to_json,
                                run_experiment)


@pytest.fixture(scope="module")
def small_report():
    cfg = ExperimentConfig("exp:alpha=1,r=2", "const:0", (1.0, math.inf),
                           (2, 3))
    return run_experiment(cfg)


class TestRunExperiment:
    def test_rows_and_ratios(self, small_report):
        assert len(small_report.rows) == 4
        for row in small_report.rows:
            assert 0.5 < row.ratio < 1.5
            assert row.bracket_lower <= row.bracket_upper
            assert row.empirical_lower <= row.bracket_upper + 1e-12

    def test_ratios_approach_one(self):
        cfg = ExperimentConfig("exp:alpha=1,r=2", "const:0", (2.0,),
                               (2, 3, 4, 5))
        rows = run_experiment(cfg).rows
        assert abs(rows[-1].ratio - 1) < abs(rows[0].ratio - 1) + 1e-3

    def test_single_term_kernel(self):
        # remainder empty: empirical error is the pure main term
        cfg = ExperimentConfig("table:1", "const:0", (2.0,), (1,),
                               DeltaRule("scaled", 256.0))
        row = run_experiment(cfg).rows[0]
        from triginterp.asymptotics import an_bracket
        expected = (2 / math.pi) * an_bracket(1, 0.0, 2.0).lower
        assert row.empirical_lower == pytest.approx(expected, rel=1e-3)

    def test_underflow_marked(self):
        cfg = ExperimentConfig("exp:alpha=1,r=2", "const:0", (2.0,), (30,))
        row = run_experiment(cfg).rows[0]
        assert row.underflow and row.ratio is None

    def test_empty_n_list(self):
        with pytest.raises(ConfigError):
            run_experiment(ExperimentConfig("factorial", "const:0", (2.0,), ()))

    def test_bad_spec_names_token(self):
        cfg = ExperimentConfig("exp:alpha=1,q=2", "const:0", (2.0,), (2,))
        with pytest.raises(Exception, match="q=2"):
            run_experiment(cfg)

    def test_delta_rule_fixed_validation(self):
        with pytest.raises(ConfigError):
            run_experiment(ExperimentConfig("factorial", "const:0", (2.0,),
                                            (4,), DeltaRule("fixed", 1.0)))


class TestEmit:
    def test_csv_columns_and_header(self, small_report):
        text = report_to_csv(small_report)
        lines = text.strip().split("\n")
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 5

    def test_inf_literal(self, small_report):
        text = report_to_csv(small_report)
        assert ",inf," in text

    def test_17_sig_digits(self, small_report):
        import csv
        import io

        from triginterp.harness import _fmt
        assert _fmt(1 / 3) == "0.33333333333333331"
        # every numeric cell round-trips exactly
        records = list(csv.DictReader(io.StringIO(report_to_csv(small_report))))
        for rec, row in zip(records, small_report.rows):
            assert float(rec["empirical_lower"]) == row.empirical_lower
            assert float(rec["delta"]) == row.delta
            assert rec["psi"] == row.psi

    def test_json_round_trip(self, small_report, tmp_path):
        path = tmp_path / "r.json"
        emit_report(small_report, "json", str(path))
        data = json.loads(path.read_text())
        assert len(data["rows"]) == len(small_report.rows)
        for row, d in zip(small_report.rows, data["rows"]):
            assert d["empirical_lower"] == row.empirical_lower
            assert d["ratio"] == row.ratio
            assert d["n"] == row.n

    def test_csv_deterministic(self, small_report):
        cfg = small_report.config
        again = run_experiment(cfg)
        assert report_to_csv(again) == report_to_csv(small_report)

    def test_atomic_no_tmp_left(self, small_report, tmp_path):
        path = tmp_path / "r.csv"
        emit_report(small_report, "csv", str(path))
        assert path.exists()
        assert [p.name for p in tmp_path.iterdir()] == ["r.csv"]

    def test_unwritable_path(self, small_report):
        with pytest.raises(IOError, match="/no/such/dir"):
            emit_report(small_report, "csv", "/no/such/dir/r.csv")

    def test_gnuplot_blocks(self, small_report, tmp_path):
        path = tmp_path / "data.dat"
        emit_gnuplot_data(small_report, str(path))
        text = path.read_text()
        assert "# p=1" in text and "# p=inf" in text
        assert "\n\n\n" in text

    def test_empty_report_rejected(self, small_report):
        from triginterp.harness import ExperimentReport
        empty = ExperimentReport(config=small_report.config, rows=())
        with pytest.raises(ValueError):
            emit_report(empty, "csv", "/tmp/never.csv")


class TestCli:
    def test_verify_csv_and_plot(self, tmp_path):
        out = tmp_path / "rep.csv"
        fig = tmp_path / "rep.png"
        dat = tmp_path / "rep.dat"
        rc = cli_main(["verify", "--psi", "exp:alpha=1,r=2", "--beta",
                       "const:0", "--p", "2", "--n", "2..3", "--out",
                       str(out), "--plot", str(fig), "--gnuplot-data",
                       str(dat)])
        assert rc == 0
        assert out.exists() and fig.exists() and dat.exists()
        header = out.read_text().split("\n")[0]
        assert header == ",".join(CSV_COLUMNS)

    def test_verify_json(self, tmp_path):
        out = tmp_path / "rep.json"
        rc = cli_main(["verify", "--psi", "factorial", "--beta", "const:0.5",
                       "--p", "1,inf", "--n", "2,4", "--format", "json",
                       "--out", str(out)])
        assert rc == 0
        assert len(json.loads(out.read_text())["rows"]) == 4

    def test_comparator_motornyi(self, tmp_path):
        out = tmp_path / "rep.csv"
        # looser tol keeps the slowly decaying power series cutoff small
        rc = cli_main(["verify", "--psi", "pow:r=3", "--beta", "const:0",
                       "--p", "1", "--n", "2,3", "--comparator", "motornyi",
                       "--tol", "1e-6", "--out", str(out)])
        assert rc == 0
        header = out.read_text().split("\n")[0]
        assert header.endswith(",motornyi")

    def test_config_error_exit_2(self, tmp_path, capsys):
        rc = cli_main(["verify", "--psi", "bogus:spec", "--beta", "const:0",
                       "--p", "2", "--n", "2", "--out", str(tmp_path / "x")])
        assert rc == 2
        assert "bogus" in capsys.readouterr().err

    def test_io_error_exit_3(self):
        rc = cli_main(["verify", "--psi", "factorial", "--beta", "const:0",
                       "--p", "2", "--n", "2", "--out", "/no/such/dir/x.csv"])
        assert rc == 3

    def test_constants_output(self, capsys):
        assert cli_main(["constants", "--p", "1,2,inf"]) == 0
        out = capsys.readouterr().out
        assert "p=inf" in out and "1.6211389" in out

    def test_favard_output(self, capsys):
        assert cli_main(["favard", "--m", "0..2"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert len(lines) == 3 and lines[0].startswith("m=0 K=1")

    def test_entry_point_installed(self):
        proc = subprocess.run([sys.executable, "-m", "triginterp.cli",
                               "constants", "--p", "2"],
                              capture_output=True, text=True)
        assert proc.returncode == 0
