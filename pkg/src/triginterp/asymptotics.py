"""Closed-form asymptotic quantities: the oscillatory envelope wave, the
extremal-factor bracket, main-term constants, error predictions for the
gaussian and power coefficient families, and Favard constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .norms import QuadratureConfig, cos_norm, lp_norm
from .sequences import PsiSequence, epsilon_n, psi_tail_sum, psi_value

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

# Default envelope constant for O(1) slack terms; reporting only, never
# asserted as a theorem.
DEFAULT_SLACK_C = 10.0


@dataclass(frozen=True)
class PhiWave:
    """cos(nx - theta/2) g(x) + sin(nx - theta/2) h(x) with
    g(x) = 1 - cos(x - theta), h(x) = -sin(x - theta).

    Equals the product 2 sin((2n-1)x/2) sin((theta-x)/2) pointwise.
    """

    n: int
    theta: float

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        g = 1.0 - np.cos(x_arr - self.theta)
        h = -np.sin(x_arr - self.theta)
        phase = self.n * x_arr - self.theta / 2.0
        out = np.cos(phase) * g + np.sin(phase) * h
        return float(out) if x_arr.ndim == 0 else out

    def product_form(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = (2.0 * np.sin((2 * self.n - 1) * x_arr / 2.0)
               * np.sin((self.theta - x_arr) / 2.0))
        return float(out) if x_arr.ndim == 0 else out


@dataclass(frozen=True)
class AnBracket:
    lower: float
    upper: float


@dataclass(frozen=True)
class ErrorPrediction:
    main: float
    slack: float


@dataclass(frozen=True)
class GaussianRateCheck:
    condition_holds: bool
    eps_n: float
    eps_ratio: float
    bound: float


def _wave_cfg(n: int, cfg: QuadratureConfig) -> QuadratureConfig:
    # the wave oscillates at frequency ~n; keep >= 64 points per period
    return QuadratureConfig(base_points=max(cfg.base_points, 64 * n),
                            refinement_limit=cfg.refinement_limit,
                            rel_tol=cfg.rel_tol)


def phi_wave_norm(n: int, theta: float, p: float,
                  cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """||Phi_{n,theta}||_p; tends to 2^{1-1/p} pi^{-1/p} ||cos||_p^2 with an
    O(1/n) deviation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return lp_norm(PhiWave(n, theta), p, _wave_cfg(n, cfg))


def phi_wave_norm_limit(p: float) -> float:
    """The n -> infinity limit 2^{1-1/p} pi^{-1/p} ||cos||_p^2."""
    inv_p = 0.0 if math.isinf(p) else 1.0 / float(p)
    return 2.0 ** (1.0 - inv_p) * math.pi ** (-inv_p) * cos_norm(p) ** 2


def _golden_max(f, a: float, b: float, tol: float = 1e-6):
    """Golden-section maximization of a unimodal f on [a, b]."""
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return max(fc, fd)


def an_bracket(n: int, beta_n: float, p: float,
               cfg: QuadratureConfig = QuadratureConfig()) -> AnBracket:
    """Two-sided bracket for the extremal factor: lower from theta = pi*beta_n,
    upper from the numerical sup over theta in [0, 2*pi)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lower = 0.5 * phi_wave_norm(n, math.pi * beta_n, p, cfg)

    def norm_at(theta: float) -> float:
        return phi_wave_norm(n, theta, p, cfg)

    thetas = 2.0 * math.pi * np.arange(4 * n) / (4 * n)
    coarse = np.array([norm_at(t) for t in thetas])
    spacing = 2.0 * math.pi / (4 * n)
    best = float(np.max(coarse))
    for i in np.argsort(coarse)[::-1][:3]:
        t0 = thetas[i]
        best = max(best, _golden_max(norm_at, t0 - spacing, t0 + spacing))
    upper = 0.5 * best
    upper = max(upper, lower)  # sup includes theta = pi*beta_n
    return AnBracket(lower=lower, upper=upper)


def main_constant(p: float) -> float:
    """The asymptotic main-term constant 2^{1-1/p} pi^{-(1+1/p)} ||cos||_p^2.

    Equals 16/pi^2 at p = 1 and 2/pi at p = inf.
    """
    p = float(p)
    if not (p >= 1.0):
        raise ValueError(f"p must be >= 1 or inf, got {p}")
    inv_p = 0.0 if math.isinf(p) else 1.0 / p
    return 2.0 ** (1.0 - inv_p) * math.pi ** (-(1.0 + inv_p)) * cos_norm(p) ** 2


def predict_error(seq: PsiSequence, n: int, p: float,
                  slack_c: float = DEFAULT_SLACK_C) -> ErrorPrediction:
    """Main term main_constant(p)*psi(n) with a reporting slack envelope.

    When eps_n < 1 the slack is C*psi(n)*(1/n + eps_n/(1-eps_n)); otherwise
    it falls back to C*(psi(n)/n + tail_sum(n)).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    main = main_constant(p) * psi_value(seq, n)
    if seq.kind == "table" and len(seq.values) < n + 1:
        eps = 0.0  # zero tail beyond the table
    else:
        eps = epsilon_n(seq, n)
    if eps < 1.0:
        slack = slack_c * psi_value(seq, n) * (1.0 / n + eps / (1.0 - eps))
    else:
        slack = slack_c * (psi_value(seq, n) / n + psi_tail_sum(seq, n))
    return ErrorPrediction(main=main, slack=slack)


def theorem2_check(alpha: float, r: float, n: int) -> GaussianRateCheck:
    """Admissibility chain for psi(k) = exp(-alpha k^r), r > 1: whether
    n^{1-r} ln(n+1) <= alpha*r, and then eps_n/(1-eps_n) <= 2/n."""
    if alpha <= 0 or r <= 1:
        raise ValueError("need alpha > 0 and r > 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    holds = n ** (1.0 - r) * math.log(n + 1) <= alpha * r
    eps = math.exp(-alpha * ((n + 1) ** r - n ** r))
    ratio = eps / (1.0 - eps)
    bound = 2.0 / n
    if holds and ratio > bound:
        raise AssertionError(
            f"rate chain violated: eps_n/(1-eps_n) = {ratio} > 2/n = {bound}")
    return GaussianRateCheck(condition_holds=holds, eps_n=eps,
                             eps_ratio=ratio, bound=bound)


def theorem3_prediction(r: float, n: int, p: float,
                        slack_c: float = DEFAULT_SLACK_C) -> ErrorPrediction:
    """Prediction for psi(k) = k^-r: main_constant(p)/n^r with the power-tail
    slack envelope; for r >= n+1 the (1 + n/(r-1)) factor drops."""
    if r <= 1:
        raise ValueError("r must be > 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    main = main_constant(p) * n ** (-r)
    tail_factor = math.exp(-r / (n + 1))
    if r < n + 1:
        tail_factor *= 1.0 + n / (r - 1.0)
    slack = slack_c * n ** (-r) * (1.0 / n + tail_factor)
    return ErrorPrediction(main=main, slack=slack)


def favard(m: int, tol: float = 1e-12) -> float:
    """Favard constant K_m = (4/pi) sum_v (-1)^{v(m+1)} / (2v+1)^{m+1}.

    For even m the series alternates and converges too slowly for direct
    term-count stopping, so mpmath's accelerated summation is used; the
    result is accurate well beyond tol.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    with mpmath.workdps(30):
        if (m + 1) % 2 == 0:
            total = mpmath.nsum(lambda v: (2 * v + 1) ** (-(m + 1)),
                                [0, mpmath.inf])
        else:
            total = mpmath.nsum(lambda v: (-1) ** v * (2 * v + 1) ** (-(m + 1)),
                                [0, mpmath.inf], method="a")  # alternating
        return float(4 / mpmath.pi * total)


def motornyi_main_term(r: int, n: int) -> float:
    """Fourier-sum comparator 2 K_{r-1} ln(n) / (pi n^r); reporting only."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 2:
        raise ValueError("n must be >= 2")
    return 2.0 * favard(r - 1) * math.log(n) / (math.pi * n ** r)
