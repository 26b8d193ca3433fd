"""L_p norms on [0, 2*pi] in the unnormalized convention (no 1/(2*pi)).

p is any real >= 1, with math.inf for the sup norm.  Quadrature is the
composite trapezoid rule on the period (equal to the rectangle rule for
periodic integrands), doubled until relative convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class QuadratureConfig:
    base_points: int = 4096
    refinement_limit: int = 4
    rel_tol: float = 1e-9

    def __post_init__(self):
        if self.base_points < 16:
            raise ValueError("base_points must be >= 16")


def _check_p(p: float) -> float:
    p = float(p)
    if not (p >= 1.0):
        raise ValueError(f"p must be >= 1 or inf, got {p}")
    return p


def _eval_grid(f, n_points: int) -> np.ndarray:
    t = TWO_PI * np.arange(n_points) / n_points
    vals = np.asarray(f(t), dtype=float)
    if vals.shape != t.shape:
        # allow scalar-only callables
        vals = np.array([float(f(ti)) for ti in t])
    if not np.all(np.isfinite(vals)):
        raise ValueError("function returned a non-finite value")
    return vals


def lp_norm(f, p: float, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """||f||_p = (int_0^{2pi} |f|^p dt)^{1/p}; p = inf uses a grid max with
    parabolic refinement around the leading local maxima."""
    p = _check_p(p)
    if math.isinf(p):
        return _sup_norm(f, cfg)
    n_pts = cfg.base_points
    prev = None
    for _ in range(cfg.refinement_limit + 1):
        vals = _eval_grid(f, n_pts)
        integral = (TWO_PI / n_pts) * float(np.sum(np.abs(vals) ** p))
        if prev is not None and abs(integral - prev) <= cfg.rel_tol * abs(integral):
            break
        prev = integral
        n_pts *= 2
    return integral ** (1.0 / p)


def _sup_norm(f, cfg: QuadratureConfig) -> float:
    n_pts = cfg.base_points * 2 ** cfg.refinement_limit
    t = TWO_PI * np.arange(n_pts) / n_pts
    vals = np.abs(_eval_grid(f, n_pts))
    best = float(np.max(vals))
    h = TWO_PI / n_pts
    # parabolic fit through the top grid maxima and their neighbors
    order = np.argsort(vals)[::-1][:5]
    for i in order:
        y0, y1, y2 = vals[(i - 1) % n_pts], vals[i], vals[(i + 1) % n_pts]
        denom = y0 - 2.0 * y1 + y2
        if denom >= 0:
            continue
        shift = 0.5 * h * (y0 - y2) / denom
        cand = abs(float(np.asarray(f(np.array([t[i] + shift])))[0]))
        best = max(best, cand)
    return best


def cos_norm(p: float) -> float:
    """Closed form ||cos||_p: (2 sqrt(pi) Gamma((p+1)/2) / Gamma(p/2+1))^{1/p};
    1 at p = inf."""
    p = _check_p(p)
    if math.isinf(p):
        return 1.0
    log_pp = (math.log(2.0) + 0.5 * math.log(math.pi)
              + math.lgamma((p + 1.0) / 2.0) - math.lgamma(p / 2.0 + 1.0))
    return math.exp(log_pp / p)
