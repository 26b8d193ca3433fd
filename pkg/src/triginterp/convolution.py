"""Convolution-class members built from the two-box extremal density.

The density has mass +1/2 spread over (-delta/2, delta/2) and -1/2 over
(pi/n - delta/2, pi/n + delta/2).  Convolving it with the kernel gives a
closed-form cosine series, so no quadrature enters the lower-bound path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .interpolation import eval_poly, fold_frequency, interpolate, nodes
from .sequences import Kernel, psi_value, tail_upper_bound, truncation_index

TWO_PI = 2.0 * math.pi


def _sinc(u):
    """sin(u)/u with sinc(0) = 1 (unnormalized)."""
    return np.sinc(np.asarray(u) / math.pi)


@dataclass(frozen=True)
class BoxPhi:
    """Two opposite boxes of width delta, heights +-1/(2*delta)."""

    n: int
    delta: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not (0.0 < self.delta < math.pi / self.n):
            raise ValueError(
                f"delta must lie in (0, pi/n) = (0, {math.pi / self.n}), "
                f"got {self.delta}")

    def value(self, t):
        """Pointwise density (for quadrature cross-checks only)."""
        t_arr = np.asarray(t, dtype=float)
        u = np.mod(t_arr + self.delta / 2, TWO_PI) - self.delta / 2
        h = 1.0 / (2.0 * self.delta)
        c = math.pi / self.n
        out = np.where(np.abs(u) < self.delta / 2, h, 0.0)
        out = np.where(np.abs(u - c) < self.delta / 2, -h, out)
        return float(out) if t_arr.ndim == 0 else out

    def cos_integral(self, a: float, b):
        """int cos(a*t + b) phi(t) dt = sinc(a d/2) (cos b - cos(a pi/n + b))/2."""
        half = 0.5 * float(_sinc(a * self.delta / 2))
        b_arr = np.asarray(b, dtype=float)
        out = half * (np.cos(b_arr) - np.cos(a * math.pi / self.n + b_arr))
        return float(out) if b_arr.ndim == 0 else out

    def sin_integral(self, a: float, b):
        """int sin(a*t + b) phi(t) dt."""
        return self.cos_integral(a, np.asarray(b, dtype=float) - math.pi / 2)


def make_box_phi(n: int, delta: float) -> BoxPhi:
    return BoxPhi(n=n, delta=delta)


class ClassFunction:
    """Convolution of the kernel with a BoxPhi, as a closed-form series.

    f(x) = a0/2 + (1/pi) sum_k psi(k) * int cos(k(x-t) - pi*beta_k/2) phi(t) dt,
    truncated so the omitted tail is below tol in absolute value.
    """

    def __init__(self, kernel: Kernel, phi: BoxPhi, a0: float = 0.0,
                 tol: float = 1e-10):
        if tol <= 0:
            raise ValueError("tol must be positive")
        self.kernel = kernel
        self.phi = phi
        self.a0 = a0
        self.tol = tol
        # each omitted term is at most psi(k)/pi in magnitude
        self.cutoff = truncation_index(kernel.psi, math.pi * tol)
        ks = np.arange(1, self.cutoff + 1)
        self._ks = ks
        self._psis = np.array([psi_value(kernel.psi, int(k)) for k in ks])
        self._gammas = np.array(
            [math.pi * kernel.beta.value(int(k)) / 2 for k in ks])
        self._coef = self._psis * np.asarray(_sinc(ks * phi.delta / 2)) / TWO_PI
        self._shift = ks * math.pi / phi.n

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(x_arr).ravel()
        out = np.empty_like(flat)
        # keep the (points x terms) workspace bounded
        block = max(1, 4_000_000 // max(self.cutoff, 1))
        for i in range(0, len(flat), block):
            kx = np.multiply.outer(flat[i:i + block], self._ks)
            out[i:i + block] = (np.cos(kx - self._gammas)
                                - np.cos(kx - self._shift - self._gammas)
                                ) @ self._coef
        out = self.a0 / 2.0 + out.reshape(np.shape(x_arr))
        return float(out) if x_arr.ndim == 0 else out


def class_function(kernel: Kernel, phi: BoxPhi, a0: float = 0.0,
                   tol: float = 1e-10) -> ClassFunction:
    return ClassFunction(kernel, phi, a0, tol)


class ResidualDecomposition:
    """Interpolation residual split into the order-n main term and the
    folded-cosine remainder.

    main(x) = (2/pi) psi(n) sin((2n-1)x/2) * J(x) with
    J(x) = sinc(n*delta/2) sin(-x/2 + pi*beta_n/2); the remainder sums the
    aliasing differences for frequencies above n with certified truncation.
    """

    def __init__(self, cf: ClassFunction, tol: float = 1e-10):
        if tol <= 0:
            raise ValueError("tol must be positive")
        self.cf = cf
        n = cf.phi.n
        self.n = n
        kernel = cf.kernel
        self._psi_n = psi_value(kernel.psi, n)
        self._gamma_n = math.pi * kernel.beta.value(n) / 2
        self._j_scale = float(_sinc(n * cf.phi.delta / 2))
        # remainder terms are each at most (2/pi) psi(nu)
        cutoff = truncation_index(kernel.psi, math.pi * tol / 2.0)
        cutoff = max(cutoff, n)
        nus = np.arange(n + 1, cutoff + 1)
        self._nus = nus
        self._psis = np.array([psi_value(kernel.psi, int(v)) for v in nus])
        self._gammas = np.array(
            [math.pi * kernel.beta.value(int(v)) / 2 for v in nus])
        self._folded_k = np.array(
            [fold_frequency(int(v), n).k for v in nus], dtype=float)
        self._half_sinc = 0.5 * np.asarray(_sinc(nus * cf.phi.delta / 2))
        self._shift = nus * math.pi / n

    def main_term(self, x):
        x_arr = np.asarray(x, dtype=float)
        out = ((2.0 / math.pi) * self._psi_n
               * np.sin((2 * self.n - 1) * x_arr / 2.0)
               * self._j_scale * np.sin(-x_arr / 2.0 + self._gamma_n))
        return float(out) if x_arr.ndim == 0 else out

    def remainder(self, x):
        x_arr = np.asarray(x, dtype=float)
        flat = np.atleast_1d(x_arr).ravel()
        if len(self._nus) == 0:
            out = np.zeros(np.shape(x_arr))
            return float(out) if x_arr.ndim == 0 else out
        weights = self._psis / math.pi
        out = np.empty_like(flat)
        block = max(1, 2_000_000 // len(self._nus))
        for i in range(0, len(flat), block):
            xs = flat[i:i + block]
            b_true = self._gammas - np.multiply.outer(xs, self._nus)
            b_fold = self._gammas - np.multiply.outer(xs, self._folded_k)
            i_true = self._half_sinc * (np.cos(b_true)
                                        - np.cos(self._shift + b_true))
            i_fold = self._half_sinc * (np.cos(b_fold)
                                        - np.cos(self._shift + b_fold))
            out[i:i + block] = (i_true - i_fold) @ weights
        out = out.reshape(np.shape(x_arr))
        return float(out) if x_arr.ndim == 0 else out

    def interpolation_residual(self, x):
        """Direct pipeline f - S_{n-1}(f) for cross-checks."""
        node_set = nodes(self.n)
        poly = interpolate(self.n, self.cf(node_set.nodes))
        return self.cf(x) - eval_poly(poly, x)


def residual_decomposition(cf: ClassFunction, tol: float = 1e-10) -> ResidualDecomposition:
    return ResidualDecomposition(cf, tol)
