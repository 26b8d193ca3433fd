"""Trigonometric interpolation on equidistant odd node sets and L_p error
asymptotics over convolution function classes."""

from .asymptotics import (AnBracket, ErrorPrediction, GaussianRateCheck,
                          PhiWave, an_bracket, favard, main_constant,
                          motornyi_main_term, phi_wave_norm,
                          phi_wave_norm_limit, predict_error,
                          theorem2_check, theorem3_prediction)
from .convolution import (BoxPhi, ClassFunction, ResidualDecomposition,
                          class_function, make_box_phi,
                          residual_decomposition)
from .harness import (ConfigError, DeltaRule, ExperimentConfig,
                      ExperimentReport, ReportRow, emit_gnuplot_data,
                      emit_report, run_experiment)
from .interpolation import (FoldedFrequency, NodeSet, TrigPolynomial,
                            eval_poly, fold_frequency, interpolate, nodes)
from .norms import QuadratureConfig, cos_norm, lp_norm
from .sequences import (BetaSequence, Kernel, PsiSequence, SpecParseError,
                        epsilon_n, kernel_eval, parse_beta_spec,
                        parse_psi_spec, power_tail_factor, power_tail_true,
                        psi_tail_sum, psi_underflows, psi_value,
                        truncation_index)

__all__ = [
    "AnBracket", "BetaSequence", "BoxPhi", "ClassFunction", "ConfigError",
    "DeltaRule", "ErrorPrediction", "ExperimentConfig", "ExperimentReport",
    "FoldedFrequency", "GaussianRateCheck", "Kernel", "NodeSet", "PhiWave",
    "PsiSequence", "QuadratureConfig", "ReportRow", "ResidualDecomposition",
    "SpecParseError", "TrigPolynomial", "an_bracket", "class_function",
    "cos_norm", "emit_gnuplot_data", "emit_report", "epsilon_n", "eval_poly",
    "favard", "fold_frequency", "interpolate", "kernel_eval", "lp_norm",
    "main_constant", "make_box_phi", "motornyi_main_term", "nodes",
    "parse_beta_spec", "parse_psi_spec", "phi_wave_norm",
    "phi_wave_norm_limit", "power_tail_factor", "power_tail_true",
    "predict_error", "psi_tail_sum", "psi_underflows", "psi_value",
    "residual_decomposition", "run_experiment", "theorem2_check",
    "theorem3_prediction", "truncation_index",
]

__version__ = "0.1.0"
