"""Hankel transforms on the half line.

Two unitarily equivalent forms are provided:

  modified form   H_a f(tau) = int f(u) J_a(tau u)/(tau u)^a  u^(2a+1) du
                  (self-inverse on L^2(u^(2a+1) du)),
  Liouville form  H'_b f(tau) = int f(u) (tau u)^(1/2) J_b(tau u) du
                  (self-inverse on L^2(du)).

They are conjugate through multiplication by u^(a+1/2):  the Liouville form
equals U_a H_a U_a^{-1} with U_a f = u^(a+1/2) f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from .quadrature import HalfLineRule, TruncationPolicy, build_finite_rule, build_rule
from .specfun import bessel_j_normalized, _order_value
from scipy.special import jv

__all__ = [
    "HalfLineFunction",
    "hankel_modified",
    "hankel_liouville",
    "hankel_modified_inverse",
    "hankel_liouville_inverse",
    "rule_for_function",
]

# hankel quadrature resolves the J_beta(tau u) oscillation with panel width
# <= pi/(4 tau_max); realized by passing 2*tau_max as the frequency bound
_FREQ_FACTOR = 2.0

# kernel matrices are built in blocks of at most this many entries
_BLOCK = 4_000_000


@dataclass(frozen=True)
class HalfLineFunction:
    """Evaluable profile on (0, inf) with integration hints.

    fn must accept numpy arrays.  When support is None the decay hint and
    rate choose the truncation; endpoint_exponent declares a u^gamma factor
    at the origin.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    support: Optional[Tuple[float, float]] = None
    decay: str = "gaussian"
    rate: float = 1.0
    endpoint_exponent: float = 0.0

    def __call__(self, u):
        return self.fn(u)


def as_half_line_function(f) -> HalfLineFunction:
    if isinstance(f, HalfLineFunction):
        return f
    if callable(f):
        return HalfLineFunction(f)
    raise TypeError("expected a callable or HalfLineFunction")


def rule_for_function(f: HalfLineFunction, freq: float = 0.0,
                      abs_tol: float = 1e-12, points_per_panel: int = 8,
                      extra_exponent: float = 0.0) -> HalfLineRule:
    """Quadrature rule adequate for f against a kernel of frequency <= freq."""
    gamma = f.endpoint_exponent + extra_exponent
    if f.support is not None:
        a, b = f.support
        width = np.pi / (2.0 * _FREQ_FACTOR * freq) if freq > 0.0 else (b - a) / 8.0
        return build_finite_rule(a, b, width, points_per_panel,
                                 endpoint_exponent=gamma if a == 0.0 else 0.0)
    policy = TruncationPolicy(abs_tol=abs_tol, decay_hint=f.decay, rate=f.rate,
                              freq_bound=_FREQ_FACTOR * freq,
                              endpoint_exponent=gamma)
    return build_rule(policy, points_per_panel)


def _values_and_rule(f, taus, rule, extra_exponent):
    taus = np.atleast_1d(np.asarray(taus, dtype=float))
    if isinstance(f, np.ndarray):
        if rule is None:
            raise ValueError("passing sampled values requires an explicit rule")
        vals = f
        if vals.shape != rule.nodes.shape:
            raise ValueError("sampled values must match the rule nodes")
    else:
        hf = as_half_line_function(f)
        if rule is None:
            rule = rule_for_function(hf, freq=float(taus.max(initial=0.0)),
                                     extra_exponent=extra_exponent)
        vals = np.asarray(hf(rule.nodes))
    return vals, rule, taus


def _kernel_apply(taus, rule, weighted_vals, kernel):
    """sum_i kernel(tau_k, u_i) * weighted_vals_i, blocked over tau."""
    out = np.empty(len(taus), dtype=weighted_vals.dtype)
    step = max(1, _BLOCK // max(1, len(rule.nodes)))
    for lo in range(0, len(taus), step):
        tk = taus[lo:lo + step]
        out[lo:lo + step] = kernel(tk[:, None], rule.nodes[None, :]) @ weighted_vals
    return out


def hankel_modified(alpha, f, taus, rule: Optional[HalfLineRule] = None):
    """Modified-form transform of f at the points taus (taus >= 0 allowed)."""
    alpha = _order_value(alpha)
    vals, rule, taus = _values_and_rule(f, taus, rule, 2.0 * alpha + 1.0)
    if np.any(taus < 0.0):
        raise ValueError("tau must be >= 0")
    weighted = rule.weights * vals * rule.nodes ** (2.0 * alpha + 1.0)
    out = _kernel_apply(taus, rule, weighted,
                        lambda t, u: bessel_j_normalized(alpha, t * u))
    return out if out.size > 1 else out[0]


def hankel_liouville(beta, f, taus, rule: Optional[HalfLineRule] = None):
    """Liouville-form transform of f at the points taus (taus > 0)."""
    beta = _order_value(beta)
    # the kernel itself contributes u^(b+1/2) at the origin
    vals, rule, taus = _values_and_rule(f, taus, rule, min(beta + 0.5, 0.0))
    if np.any(taus <= 0.0):
        raise ValueError("tau must be > 0 for the Liouville form")
    weighted = rule.weights * vals
    out = _kernel_apply(taus, rule, weighted,
                        lambda t, u: np.sqrt(t * u) * jv(beta, t * u))
    return out if out.size > 1 else out[0]


# both forms are involutions on their L^2 spaces; the aliases let call sites
# say which direction they mean
hankel_modified_inverse = hankel_modified
hankel_liouville_inverse = hankel_liouville
