"""Coefficient sequences, phase sequences and the generating kernel.

A kernel is a cosine series sum_k psi(k) * cos(k*t - pi*beta_k/2) with
positive summable coefficients psi(k).  Everything here is a pure function
of immutable value objects, so concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaincc, zeta

# Smallest positive normal double; gaussian coefficients below this are
# flushed to exact zero and reported through `underflows`.
_MIN_NORMAL = 2.2250738585072014e-308
_LOG_MIN_NORMAL = math.log(_MIN_NORMAL)

# Relative stopping threshold for direct tail summation.
_REL_STOP = 1e-16


class SpecParseError(ValueError):
    """Raised when a compact psi/beta spec string cannot be parsed."""


@dataclass(frozen=True)
class PsiSequence:
    """Positive coefficient sequence psi(k), k >= 1.

    kind is one of 'gaussian_exponential' (psi(k) = exp(-alpha*k^r)),
    'power' (psi(k) = k^-r, r > 1), 'factorial' (psi(k) = 1/k!) or
    'table' (finite list, exact zero beyond the end).
    """

    kind: str
    alpha: float = 0.0
    r: float = 0.0
    values: tuple = field(default=())

    def __post_init__(self):
        if self.kind == "gaussian_exponential":
            if self.alpha <= 0 or self.r <= 0:
                raise ValueError("gaussian_exponential needs alpha > 0, r > 0")
        elif self.kind == "power":
            if self.r <= 1:
                raise ValueError("power needs r > 1 for summability")
        elif self.kind == "factorial":
            pass
        elif self.kind == "table":
            if any(v < 0 for v in self.values):
                raise ValueError("table values must be nonnegative")
        else:
            raise ValueError(f"unknown PsiSequence kind {self.kind!r}")

    def spec_string(self) -> str:
        if self.kind == "gaussian_exponential":
            return f"exp:alpha={self.alpha:g},r={self.r:g}"
        if self.kind == "power":
            return f"pow:r={self.r:g}"
        if self.kind == "factorial":
            return "factorial"
        return "table:" + ",".join(f"{v:g}" for v in self.values)


@dataclass(frozen=True)
class BetaSequence:
    """Phase sequence beta_k.  'constant' or 'table' with periodic extension."""

    kind: str
    beta: float = 0.0
    values: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("constant", "table"):
            raise ValueError(f"unknown BetaSequence kind {self.kind!r}")
        if self.kind == "table" and not self.values:
            raise ValueError("table beta needs at least one value")

    def value(self, k: int) -> float:
        if k < 1:
            raise ValueError("beta index k must be >= 1")
        if self.kind == "constant":
            return self.beta
        return self.values[(k - 1) % len(self.values)]

    def spec_string(self) -> str:
        if self.kind == "constant":
            return f"const:{self.beta:g}"
        return "table:" + ",".join(f"{v:g}" for v in self.values)


@dataclass(frozen=True)
class Kernel:
    psi: PsiSequence
    beta: BetaSequence


def psi_value(seq: PsiSequence, k: int) -> float:
    """psi(k).  Gaussian kind forms the exponent in log-domain; values
    below the minimum positive normal are flushed to exact 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if seq.kind == "gaussian_exponential":
        log_val = -seq.alpha * math.exp(seq.r * math.log(k))
        if log_val < _LOG_MIN_NORMAL:
            return 0.0
        return math.exp(log_val)
    if seq.kind == "power":
        return float(k) ** (-seq.r)
    if seq.kind == "factorial":
        return 1.0 / math.factorial(k)
    # table: exact zero beyond the listed range
    return float(seq.values[k - 1]) if k <= len(seq.values) else 0.0


def psi_underflows(seq: PsiSequence, k: int) -> bool:
    """True when psi(k) was flushed to zero by the underflow rule."""
    if seq.kind != "gaussian_exponential":
        return False
    return -seq.alpha * math.exp(seq.r * math.log(k)) < _LOG_MIN_NORMAL


def epsilon_n(seq: PsiSequence, n: int) -> float:
    """sup_{k>=n} psi(k+1)/psi(k).

    For kinds with monotone ratio this is just the ratio at k = n; for a
    gaussian kind with r < 1 the ratio increases to 1, so 1.0 is returned.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if seq.kind == "gaussian_exponential":
        if seq.r < 1:
            return 1.0
        return math.exp(-seq.alpha * ((n + 1) ** seq.r - n ** seq.r))
    if seq.kind == "power":
        return (n / (n + 1)) ** seq.r
    if seq.kind == "factorial":
        return 1.0 / (n + 1)
    # table
    if len(seq.values) < n + 1:
        raise ValueError(f"table has {len(seq.values)} entries, need n+1={n + 1}")
    best = 0.0
    for k in range(n, len(seq.values)):
        num = seq.values[k] if k < len(seq.values) else 0.0
        den = seq.values[k - 1]
        if den > 0:
            best = max(best, num / den)
    return best


def psi_tail_sum(seq: PsiSequence, n: int, mode: str = "exact_partial") -> float:
    """Tail sum_{k>n} psi(k).

    'certified_bound' returns psi(n)*eps_n/(1-eps_n), a proven upper bound
    whenever the coefficient ratio is nonincreasing from n on (gaussian
    r >= 1, factorial, table).  'exact_partial' sums terms directly until
    increments fall below a relative threshold; the power kind uses the
    Hurwitz zeta function instead, since direct summation of k^-r is
    impractically slow for small r.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if mode == "certified_bound":
        eps = epsilon_n(seq, max(n, 1))
        if eps >= 1.0:
            raise ValueError(f"certified bound invalid: eps_n = {eps} >= 1")
        return psi_value(seq, max(n, 1)) * eps / (1.0 - eps) if n >= 1 else (
            psi_value(seq, 1) + psi_tail_sum(seq, 1, mode))
    if mode != "exact_partial":
        raise ValueError(f"unknown tail mode {mode!r}")
    if seq.kind == "power":
        return float(zeta(seq.r, n + 1))
    if seq.kind == "table":
        return float(sum(seq.values[n:]))
    total = 0.0
    k = n + 1
    while True:
        term = psi_value(seq, k)
        total += term
        if term <= _REL_STOP * total and total > 0:
            break
        if term == 0.0:
            break
        k += 1
        if k > n + 10_000_000:
            raise RuntimeError("tail summation failed to converge")
    return total


def tail_upper_bound(seq: PsiSequence, n: int) -> float:
    """Proven upper bound on sum_{k>n} psi(k), used for truncation choices."""
    if n < 1:
        return psi_value(seq, 1) + tail_upper_bound(seq, 1)
    if seq.kind == "power":
        # term at n+1 plus integral comparison
        return (n + 1) ** (-seq.r) * (1.0 + (n + 1) / (seq.r - 1.0))
    if seq.kind == "table":
        return float(sum(seq.values[n:]))
    if seq.kind == "gaussian_exponential" and seq.r < 1:
        # int_n^inf exp(-a t^r) dt = Gamma(1/r, a n^r) / (r a^(1/r))
        a, r = seq.alpha, seq.r
        integral = (math.gamma(1 / r) * float(gammaincc(1 / r, a * n ** r))
                    / (r * a ** (1 / r)))
        return psi_value(seq, n + 1) + integral
    eps = epsilon_n(seq, n)
    if eps >= 1.0:
        raise ValueError("no certified tail bound available")
    val = psi_value(seq, n)
    return val * eps / (1.0 - eps)


def truncation_index(seq: PsiSequence, tol: float) -> int:
    """Smallest K with tail_upper_bound(K) < tol, by doubling then bisection."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    hi = 1
    while tail_upper_bound(seq, hi) >= tol:
        hi *= 2
        if hi > 1 << 40:
            raise RuntimeError("tail bound never reached tolerance")
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if tail_upper_bound(seq, mid) < tol:
            hi = mid
        else:
            lo = mid
    return hi


def kernel_eval(kernel: Kernel, t, tol: float = 1e-12):
    """Evaluate the kernel series at t (scalar or array) within abs error tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    K = truncation_index(kernel.psi, tol)
    ks = np.arange(1, K + 1)
    psis = np.array([psi_value(kernel.psi, int(k)) for k in ks])
    gammas = np.array([math.pi * kernel.beta.value(int(k)) / 2 for k in ks])
    t_arr = np.asarray(t, dtype=float)
    out = np.cos(np.multiply.outer(t_arr, ks) - gammas) @ psis
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def power_tail_factor(r: float, n: int) -> float:
    """Closed upper bound on n^r * sum_{k>n} k^-r: e^{-r/(n+1)} (1+(n+1)/(r-1))."""
    if r <= 1:
        raise ValueError("r must be > 1")
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(-r / (n + 1)) * (1.0 + (n + 1) / (r - 1.0))


def power_tail_true(r: float, n: int) -> float:
    """Diagnostic companion: the true value n^r * sum_{k>n} k^-r."""
    if r <= 1:
        raise ValueError("r must be > 1")
    return n ** r * psi_tail_sum(PsiSequence("power", r=r), n, "exact_partial")


def parse_psi_spec(spec: str) -> PsiSequence:
    """Parse the compact psi grammar: exp:alpha=1,r=2 | pow:r=3 | factorial
    | table:1,0.5,0.25."""
    if spec == "factorial":
        return PsiSequence("factorial")
    if spec.startswith("exp:"):
        params = {}
        for tok in spec[4:].split(","):
            if "=" not in tok:
                raise SpecParseError(f"bad token {tok!r} in psi spec {spec!r}")
            key, _, val = tok.partition("=")
            if key not in ("alpha", "r"):
                raise SpecParseError(f"bad token {tok!r} in psi spec {spec!r}")
            try:
                params[key] = float(val)
            except ValueError:
                raise SpecParseError(f"bad token {tok!r} in psi spec {spec!r}") from None
        if set(params) != {"alpha", "r"}:
            raise SpecParseError(f"psi spec {spec!r} needs alpha and r")
        return PsiSequence("gaussian_exponential", alpha=params["alpha"], r=params["r"])
    if spec.startswith("pow:"):
        tok = spec[4:]
        if not tok.startswith("r="):
            raise SpecParseError(f"bad token {tok!r} in psi spec {spec!r}")
        try:
            return PsiSequence("power", r=float(tok[2:]))
        except ValueError:
            raise SpecParseError(f"bad token {tok!r} in psi spec {spec!r}") from None
    if spec.startswith("table:"):
        toks = spec[6:].split(",")
        try:
            vals = tuple(float(tok) for tok in toks)
        except ValueError:
            bad = next(t for t in toks if not _is_float(t))
            raise SpecParseError(f"bad token {bad!r} in psi spec {spec!r}") from None
        return PsiSequence("table", values=vals)
    raise SpecParseError(f"unrecognized psi spec {spec!r}")


def parse_beta_spec(spec: str) -> BetaSequence:
    """Parse the compact beta grammar: const:0.5 | table:0,1,0.5 (periodic)."""
    if spec.startswith("const:"):
        tok = spec[6:]
        try:
            return BetaSequence("constant", beta=float(tok))
        except ValueError:
            raise SpecParseError(f"bad token {tok!r} in beta spec {spec!r}") from None
    if spec.startswith("table:"):
        toks = spec[6:].split(",")
        try:
            vals = tuple(float(tok) for tok in toks)
        except ValueError:
            bad = next(t for t in toks if not _is_float(t))
            raise SpecParseError(f"bad token {bad!r} in beta spec {spec!r}") from None
        return BetaSequence("table", values=vals)
    raise SpecParseError(f"unrecognized beta spec {spec!r}")


def _is_float(s: str) -> bool:
    try:
        float(s)
        return True
    except ValueError:
        return False
