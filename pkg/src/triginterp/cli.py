"""Command-line interface.

Subcommands:
  verify    -- run an interpolation-error sweep and write a report
  constants -- print the asymptotic main-term constants for a p list
  favard    -- print Favard constants for a range of m

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .asymptotics import favard, main_constant
from .harness import (ConfigError, DeltaRule, ExperimentConfig, emit_gnuplot_data,
                      emit_report, format_p, run_experiment)
from .sequences import SpecParseError


def parse_p_list(text: str) -> tuple:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == "inf":
            out.append(math.inf)
        else:
            try:
                out.append(float(tok))
            except ValueError:
                raise ConfigError(f"bad p value {tok!r}") from None
    return tuple(out)


def parse_int_range(text: str) -> tuple:
    """'2..5' (inclusive range) or '2,3,7'."""
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ConfigError(f"bad range {text!r}") from None
        if hi < lo:
            raise ConfigError(f"empty range {text!r}")
        return tuple(range(lo, hi + 1))
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ConfigError(f"bad integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triginterp",
        description="Interpolation-error asymptotics for convolution classes")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run an error sweep")
    verify.add_argument("--psi", required=True,
                        help="psi spec: exp:alpha=1,r=2 | pow:r=3 | factorial | table:...")
    verify.add_argument("--beta", required=True,
                        help="beta spec: const:0.5 | table:0,1,0.5")
    verify.add_argument("--p", required=True, help="comma list, e.g. 1,2,inf")
    verify.add_argument("--n", required=True, help="comma list or a..b range")
    verify.add_argument("--delta-div", type=float, default=64.0,
                        help="scaled box width delta = pi/(n*div)")
    verify.add_argument("--delta", type=float, default=None,
                        help="fixed box width (overrides --delta-div)")
    verify.add_argument("--tol", type=float, default=1e-10)
    verify.add_argument("--out", required=True, help="report path")
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--gnuplot-data", default=None,
                        help="also dump (n, ratio) columns per p")
    verify.add_argument("--plot", default=None,
                        help="also render a figure (png/pdf) of the report")
    verify.add_argument("--comparator", choices=("motornyi",), default=None)

    constants = sub.add_parser("constants", help="print main-term constants")
    constants.add_argument("--p", required=True, help="comma list, e.g. 1,2,inf")

    fav = sub.add_parser("favard", help="print Favard constants")
    fav.add_argument("--m", required=True, help="comma list or a..b range")
    return parser


def cmd_verify(args) -> int:
    rule = (DeltaRule("fixed", args.delta) if args.delta is not None
            else DeltaRule("scaled", args.delta_div))
    config = ExperimentConfig(
        psi_spec=args.psi, beta_spec=args.beta,
        p_list=parse_p_list(args.p), n_list=parse_int_range(args.n),
        delta_rule=rule, tol=args.tol,
        comparator=args.comparator or "")
    report = run_experiment(config)
    emit_report(report, args.format, args.out)
    if args.gnuplot_data:
        emit_gnuplot_data(report, args.gnuplot_data)
    if args.plot:
        from .plots import render_report_figure
        try:
            render_report_figure(report, args.plot)
        except OSError as exc:
            raise IOError(f"cannot write figure to {args.plot}: {exc}") from exc
    return 0


def cmd_constants(args) -> int:
    for p in parse_p_list(args.p):
        print(f"p={format_p(p)} main_constant={main_constant(p):.17g}")
    return 0


def cmd_favard(args) -> int:
    for m in parse_int_range(args.m):
        if m < 0:
            raise ConfigError("m must be >= 0")
        print(f"m={m} K={favard(m):.17g}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "constants":
            return cmd_constants(args)
        return cmd_favard(args)
    except (ConfigError, SpecParseError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except IOError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
