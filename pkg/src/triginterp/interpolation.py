"""Trigonometric interpolation on the 2n-1 equidistant nodes 2*k*pi/(2n-1).

Coefficients come from direct discrete Fourier sums; the odd node count
makes the order-(n-1) interpolant unique, and desk-scale n keeps the
O(n^2) sums cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class NodeSet:
    n: int
    nodes: np.ndarray


@dataclass(frozen=True)
class TrigPolynomial:
    """a0/2 + sum_{k=1}^{n-1} (a_k cos kx + b_k sin kx)."""

    n: int
    a0: float
    a: np.ndarray
    b: np.ndarray

    def __call__(self, x):
        return eval_poly(self, x)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "a0": self.a0,
                "a": list(map(float, self.a)), "b": list(map(float, self.b))}


@dataclass(frozen=True)
class FoldedFrequency:
    m: int
    k: int


def nodes(n: int) -> NodeSet:
    """The 2n-1 nodes x_k = 2*k*pi/(2n-1), k = 0..2n-2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    count = 2 * n - 1
    return NodeSet(n=n, nodes=2.0 * math.pi * np.arange(count) / count)


def interpolate(n: int, samples) -> TrigPolynomial:
    """Unique trig polynomial of order n-1 matching the samples at the nodes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    y = np.asarray(samples, dtype=float)
    count = 2 * n - 1
    if y.shape != (count,):
        raise ValueError(f"expected {count} samples, got {y.shape}")
    x = nodes(n).nodes
    j = np.arange(n)  # frequencies 0..n-1
    c = np.cos(np.outer(j, x)) @ y * (2.0 / count)
    s = np.sin(np.outer(j, x)) @ y * (2.0 / count)
    return TrigPolynomial(n=n, a0=float(c[0]), a=c[1:].copy(), b=s[1:].copy())


def eval_poly(poly: TrigPolynomial, x):
    """Evaluate at x (scalar or array)."""
    x_arr = np.asarray(x, dtype=float)
    k = np.arange(1, poly.n)
    kx = np.multiply.outer(x_arr, k)
    out = poly.a0 / 2.0 + np.cos(kx) @ poly.a + np.sin(kx) @ poly.b
    return float(out) if x_arr.ndim == 0 else out


def fold_frequency(nu: int, n: int) -> FoldedFrequency:
    """Unique (m, k) with nu = m*(2n-1) + k, m >= 1, |k| <= n-1.

    Sampling cos(nu*x + phase) at the nodes is indistinguishable from
    frequency |k|: the m*(2n-1) part vanishes mod 2*pi at every node.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if nu < n:
        raise ValueError(f"nu = {nu} below folding range (need nu >= n = {n})")
    count = 2 * n - 1
    m = (nu + n - 1) // count
    k = nu - m * count
    return FoldedFrequency(m=m, k=k)
