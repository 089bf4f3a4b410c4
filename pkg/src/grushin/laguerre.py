"""Scaled Laguerre analysis and synthesis on L^2(0, inf).

Coefficients are taken against the orthonormal scaled Laguerre functions of
Hermite type l_{n,tau}^a; synthesis sums a truncated expansion.  The
coefficients of the gaussian envelope r^(a+1/2) exp(-r^2/2) have the closed
form

    (2^(a+1)/c_{n,a}) (sqrt(tau)/(1+tau))^(a+1) ((1-tau)/(1+tau))^n,

whose squares sum to Gamma(a+1)/2 for every tau > 0; this serves as the
exact oracle for the quadrature pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .hankel import HalfLineFunction, as_half_line_function, rule_for_function
from .quadrature import HalfLineRule, build_finite_rule
from .specfun import _order_value, laguerre_eigenvalue, laguerre_fn_seq

__all__ = [
    "LaguerreCoeffs",
    "laguerre_analyze",
    "laguerre_synthesize",
    "gaussian_coefficient",
]


@dataclass(frozen=True)
class LaguerreCoeffs:
    """Truncated expansion coefficients against {l_{n,tau}^a, n < n_max}."""

    alpha: float
    tau: float
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values))
        if self.alpha <= -1.0:
            raise ValueError("alpha must be > -1")
        if self.tau <= 0.0:
            raise ValueError("tau must be > 0")
        if self.values.ndim != 1 or self.values.size < 1:
            raise ValueError("values must be a nonempty 1-d array")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("coefficients must be finite")

    @property
    def n_max(self) -> int:
        return len(self.values)


def analysis_rule(alpha, tau, f: HalfLineFunction, n_max,
                  points_per_panel: int = 8) -> HalfLineRule:
    """Rule resolving both f and the fastest basis oscillation sqrt(lam_N tau)."""
    alpha = _order_value(alpha)
    # highest local wavenumber of l_{n,tau} for n < n_max
    kmax = np.sqrt(laguerre_eigenvalue(alpha, n_max - 1) * tau)
    width = np.pi / kmax
    if f.support is not None:
        a, b = f.support
        gamma = (f.endpoint_exponent + alpha + 0.5) if a == 0.0 else 0.0
        return build_finite_rule(a, b, width, points_per_panel,
                                 endpoint_exponent=gamma)
    # the basis functions die out past the classical turning point
    turning = np.sqrt(laguerre_eigenvalue(alpha, n_max - 1) / tau)
    base = rule_for_function(f, freq=0.0, points_per_panel=points_per_panel,
                             extra_exponent=alpha + 0.5)
    upper = min(base.upper_cut, np.ceil(turning + 6.0))
    return build_finite_rule(0.0, float(upper), width, points_per_panel,
                             endpoint_exponent=f.endpoint_exponent + alpha + 0.5)


def laguerre_analyze(alpha, tau, f, n_max: int = 128,
                     rule: HalfLineRule | None = None) -> LaguerreCoeffs:
    """Coefficients <f, l_{n,tau}^a> for n < n_max, by quadrature."""
    alpha = _order_value(alpha)
    if tau <= 0.0:
        raise ValueError("tau must be > 0")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if isinstance(f, np.ndarray):
        if rule is None:
            raise ValueError("passing sampled values requires an explicit rule")
        vals = f
    else:
        hf = as_half_line_function(f)
        if rule is None:
            rule = analysis_rule(alpha, tau, hf, n_max)
        vals = np.asarray(hf(rule.nodes))
    weighted = rule.weights * vals
    x = np.sqrt(tau) * rule.nodes
    coeffs = np.empty(n_max, dtype=weighted.dtype)
    for n, q in enumerate(laguerre_fn_seq(alpha, x, n_max)):
        coeffs[n] = np.dot(weighted, q)
    return LaguerreCoeffs(alpha, float(tau), coeffs * tau**0.25)


def laguerre_synthesize(coeffs: LaguerreCoeffs, rs):
    """Evaluate sum_n coeffs[n] l_{n,tau}^a at the points rs > 0."""
    rs = np.asarray(rs, dtype=float)
    x = np.sqrt(coeffs.tau) * rs
    out = np.zeros(x.shape, dtype=coeffs.values.dtype)
    for n, q in enumerate(laguerre_fn_seq(coeffs.alpha, x, coeffs.n_max)):
        out += coeffs.values[n] * q
    out = out * coeffs.tau**0.25
    return out if out.ndim else float(out)


def gaussian_coefficient(alpha, n, tau):
    """Closed-form coefficient <g, l_{n,tau}^a> of g(r) = r^(a+1/2) e^(-r^2/2).

    Broadcasts over n and tau.  At tau = 1 the factor ((1-tau)/(1+tau))^n
    is 1 for n = 0 and 0 otherwise.
    """
    alpha = _order_value(alpha)
    n = np.asarray(n)
    tau = np.asarray(tau, dtype=float)
    if np.any(n < 0):
        raise ValueError("n must be >= 0")
    if np.any(tau <= 0.0):
        raise ValueError("tau must be > 0")
    log_c = 0.5 * (np.log(2.0) + gammaln(n + 1.0) - gammaln(n + alpha + 1.0))
    lead = np.exp((alpha + 1.0) * np.log(2.0) - log_c
                  + (alpha + 1.0) * np.log(np.sqrt(tau) / (1.0 + tau)))
    ratio = (1.0 - tau) / (1.0 + tau)
    # integer exponent so that 0^0 = 1 at tau = 1, n = 0
    out = lead * ratio ** n
    return float(out) if out.ndim == 0 else out
