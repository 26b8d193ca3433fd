"""Experiment runner: sweeps (psi, beta, p, n), computes the empirical
interpolation error of the extremal class member, the analytic bracket and
the asymptotic prediction, and writes CSV/JSON reports atomically.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field

from .asymptotics import an_bracket, main_constant, motornyi_main_term
from .convolution import BoxPhi, ClassFunction
from .interpolation import interpolate, nodes
from .norms import QuadratureConfig, lp_norm
from .sequences import (Kernel, epsilon_n, parse_beta_spec, parse_psi_spec,
                        psi_tail_sum, psi_underflows, psi_value)

CSV_COLUMNS = ["psi", "beta", "p", "n", "delta", "empirical_lower",
               "bracket_lower", "bracket_upper", "prediction_main",
               "ratio", "tail", "eps_n"]


class ConfigError(ValueError):
    """Invalid experiment configuration."""


@dataclass(frozen=True)
class DeltaRule:
    """Box width rule: fixed value, or scaled delta = pi/(n*divisor)."""

    kind: str  # 'fixed' | 'scaled'
    value: float = 64.0

    def delta_for(self, n: int) -> float:
        d = self.value if self.kind == "fixed" else math.pi / (n * self.value)
        if not (0.0 < d < math.pi / n):
            raise ConfigError(f"delta = {d} not in (0, pi/{n}) for n = {n}")
        return d


@dataclass(frozen=True)
class ExperimentConfig:
    psi_spec: str
    beta_spec: str
    p_list: tuple
    n_list: tuple
    delta_rule: DeltaRule = DeltaRule("scaled", 64.0)
    tol: float = 1e-10
    comparator: str = ""  # '' or 'motornyi'

    def validate(self):
        if not self.p_list:
            raise ConfigError("p_list must be nonempty")
        if not self.n_list:
            raise ConfigError("n_list must be nonempty")
        if any(n < 1 for n in self.n_list):
            raise ConfigError("all n must be >= 1")
        if any(not (p >= 1.0) for p in self.p_list):
            raise ConfigError("all p must be >= 1 or inf")
        if self.tol <= 0:
            raise ConfigError("tol must be positive")
        if self.comparator not in ("", "motornyi"):
            raise ConfigError(f"unknown comparator {self.comparator!r}")
        for n in self.n_list:
            self.delta_rule.delta_for(n)


@dataclass(frozen=True)
class ReportRow:
    psi: str
    beta: str
    p: float
    n: int
    delta: float
    empirical_lower: float
    bracket_lower: float
    bracket_upper: float
    prediction_main: float
    ratio: float | None  # None when the row underflowed
    tail: float
    eps_n: float
    underflow: bool = False
    motornyi: float | None = None


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    rows: tuple = field(default=())


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Deterministic sweep over (p, n); rows sorted by (p, n)."""
    config.validate()
    psi = parse_psi_spec(config.psi_spec)
    beta = parse_beta_spec(config.beta_spec)
    kernel = Kernel(psi=psi, beta=beta)
    rows = []
    for p in sorted(config.p_list):
        for n in sorted(config.n_list):
            delta = config.delta_rule.delta_for(n)
            psi_n = psi_value(psi, n)
            underflow = psi_underflows(psi, n) or psi_n == 0.0
            tail = psi_tail_sum(psi, n, "exact_partial")
            if psi.kind == "table" and len(psi.values) < n + 1:
                eps = 0.0  # no ratios left to take; the tail is empty
            else:
                eps = epsilon_n(psi, n)
            cfg = QuadratureConfig(base_points=max(4096, 64 * n))
            # direct pipeline: build f, sample, interpolate, norm the error;
            # the construction tolerance scales with psi(n) so rapidly
            # decaying coefficients are not truncated below the term under study
            cf_tol = config.tol * psi_n if psi_n > 0 else config.tol
            cf = ClassFunction(kernel, BoxPhi(n, delta), a0=0.0, tol=cf_tol)
            poly = interpolate(n, cf(nodes(n).nodes))
            empirical = lp_norm(lambda x: cf(x) - poly(x), p, cfg)
            bracket = an_bracket(n, beta.value(n), p, cfg)
            two_over_pi = 2.0 / math.pi
            bracket_lower = two_over_pi * psi_n * bracket.lower - 2.0 * tail
            bracket_upper = two_over_pi * psi_n * bracket.upper + 2.0 * tail
            prediction = main_constant(p) * psi_n
            ratio = None if underflow else empirical / prediction
            comparator = None
            if config.comparator == "motornyi":
                if psi.kind != "power" or psi.r != int(psi.r):
                    raise ConfigError(
                        "motornyi comparator needs psi = pow:r with integer r")
                comparator = motornyi_main_term(int(psi.r), max(n, 2))
            rows.append(ReportRow(
                psi=config.psi_spec, beta=config.beta_spec, p=p, n=n,
                delta=delta, empirical_lower=empirical,
                bracket_lower=bracket_lower, bracket_upper=bracket_upper,
                prediction_main=prediction, ratio=ratio, tail=tail,
                eps_n=eps, underflow=underflow, motornyi=comparator))
    return ExperimentReport(config=config, rows=tuple(rows))


def format_p(p: float) -> str:
    if math.isinf(p):
        return "inf"
    return f"{p:g}"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _atomic_write(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except OSError as exc:
        raise IOError(f"cannot write report to {path}: {exc}") from exc


def report_to_csv(report: ExperimentReport) -> str:
    columns = list(CSV_COLUMNS)
    if report.config.comparator == "motornyi":
        columns.append("motornyi")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in report.rows:
        cells = [row.psi, row.beta, format_p(row.p), str(row.n), _fmt(row.delta),
                 _fmt(row.empirical_lower), _fmt(row.bracket_lower),
                 _fmt(row.bracket_upper), _fmt(row.prediction_main),
                 "underflow" if row.ratio is None else _fmt(row.ratio),
                 _fmt(row.tail), _fmt(row.eps_n)]
        if report.config.comparator == "motornyi":
            cells.append(_fmt(row.motornyi))
        writer.writerow(cells)
    return buf.getvalue()


def report_to_json(report: ExperimentReport) -> str:
    rows = []
    for row in report.rows:
        d = {"psi": row.psi, "beta": row.beta, "p": format_p(row.p),
             "n": row.n, "delta": row.delta,
             "empirical_lower": row.empirical_lower,
             "bracket_lower": row.bracket_lower,
             "bracket_upper": row.bracket_upper,
             "prediction_main": row.prediction_main,
             "ratio": row.ratio, "tail": row.tail, "eps_n": row.eps_n,
             "underflow": row.underflow}
        if report.config.comparator == "motornyi":
            d["motornyi"] = row.motornyi
        rows.append(d)
    return json.dumps({"rows": rows}, indent=2) + "\n"


def emit_report(report: ExperimentReport, fmt: str, path: str):
    """Write the report atomically as CSV or JSON."""
    if not report.rows:
        raise ValueError("report is empty")
    if fmt == "csv":
        _atomic_write(path, report_to_csv(report))
    elif fmt == "json":
        _atomic_write(path, report_to_json(report))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def emit_gnuplot_data(report: ExperimentReport, path: str):
    """(n, ratio) columns per p, as blank-line-separated gnuplot blocks."""
    blocks = []
    for p in sorted({row.p for row in report.rows}):
        lines = [f"# p={format_p(p)}", "# n ratio"]
        for row in report.rows:
            if row.p == p and row.ratio is not None:
                lines.append(f"{row.n} {_fmt(row.ratio)}")
        blocks.append("\n".join(lines))
    _atomic_write(path, "\n\n\n".join(blocks) + "\n")
