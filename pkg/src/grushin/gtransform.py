"""The combined Laguerre-Hankel transform on the quarter plane.

For type parameters a, b > -1 the forward transform sends f in L^2(R^2_+) to
a function on N x (0, inf):

    F(n, tau) = <H'_b f(r, .)(tau), l_{n,tau}^a(r)>_r,

i.e. a Liouville Hankel transform in the second variable followed by a scaled
Laguerre analysis in the first.  It is unitary onto L^2(N x (0, inf)) and
diagonalizes the quarter-plane operator

    -d^2/dr^2 + (a^2-1/4)/r^2 + r^2 (-d^2/ds^2 + (b^2-1/4)/s^2)

with spectral symbol lam_n^a * tau, lam_n^a = 2(2n+a+1).  The continuous tau
axis is discretized on a quadrature grid whose weights make norms, inverses,
and the functional calculus finite computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from scipy.special import jv

from .quadrature import HalfLineRule, TruncationPolicy, build_finite_rule, build_rule
from .specfun import laguerre_eigenvalue, laguerre_fn_seq
from .hankel import HalfLineFunction, as_half_line_function, rule_for_function

__all__ = [
    "TypePair",
    "PlaneFunction",
    "SpectralData",
    "Multiplier",
    "default_tau_rule",
    "spectral_symbol",
    "g_forward",
    "g_forward_separated",
    "g_forward_hat",
    "g_inverse",
    "g_inverse_grid",
    "plancherel_norm",
    "functional_calculus",
]

DEFAULT_N_MAX = 96


@dataclass(frozen=True)
class TypePair:
    """Type parameters (alpha, beta), each > -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not np.isfinite(v) or v <= -1.0:
                raise ValueError(f"{name} must be a finite real > -1, got {v}")


@dataclass(frozen=True)
class PlaneFunction:
    """Evaluable function on the open quarter plane with integration hints.

    fn must broadcast over numpy arrays.  support, when given, is a box
    ((r_lo, r_hi), (s_lo, s_hi)); otherwise the decay hint and rate govern
    truncation in both variables.
    """

    fn: Callable[[np.ndarray, np.ndarray], np.ndarray]
    support: Optional[Tuple[Tuple[float, float], Tuple[float, float]]] = None
    decay: str = "gaussian"
    rate: float = 1.0

    def __call__(self, r, s):
        return self.fn(r, s)

    def axis_profile(self, axis: int) -> HalfLineFunction:
        """Integration hints for one variable (the eval slot is a placeholder;
        rule construction never calls it)."""
        span = None if self.support is None else tuple(self.support[axis])
        return HalfLineFunction(fn=lambda x: x, support=span,
                                decay=self.decay, rate=self.rate)


def as_plane_function(f) -> PlaneFunction:
    if isinstance(f, PlaneFunction):
        return f
    if callable(f):
        return PlaneFunction(f)
    raise TypeError("expected a callable or PlaneFunction")


@dataclass(frozen=True)
class SpectralData:
    """Truncated transform values on {0..n_max-1} x tau_grid.

    tau_weights are the quadrature weights of the grid; the squared norm is
    sum_k w_k sum_n |values[n, k]|^2.
    """

    alpha: float
    beta: float
    tau_grid: np.ndarray
    tau_weights: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tau_grid", np.asarray(self.tau_grid, dtype=float))
        object.__setattr__(self, "tau_weights", np.asarray(self.tau_weights, dtype=float))
        object.__setattr__(self, "values", np.asarray(self.values))
        if self.alpha <= -1.0 or self.beta <= -1.0:
            raise ValueError("type parameters must be > -1")
        if self.tau_grid.ndim != 1 or np.any(np.diff(self.tau_grid) <= 0.0):
            raise ValueError("tau_grid must be strictly increasing")
        if np.any(self.tau_grid <= 0.0):
            raise ValueError("tau_grid must be positive")
        if self.tau_weights.shape != self.tau_grid.shape:
            raise ValueError("tau_weights must match tau_grid")
        if np.any(self.tau_weights <= 0.0):
            raise ValueError("tau_weights must be positive")
        if self.values.ndim != 2 or self.values.shape[1] != len(self.tau_grid):
            raise ValueError("values must have shape (n_max, len(tau_grid))")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("spectral values must be finite")

    @property
    def n_max(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class Multiplier:
    """Spectral multiplier applied to the symbol lam_n^a * tau."""

    phi: Callable[[np.ndarray], np.ndarray]
    bounded: bool = True

    def __call__(self, y):
        return self.phi(y)


def spectral_symbol(alpha, n, tau):
    """The diagonalizing symbol lam_n^a * tau."""
    return laguerre_eigenvalue(alpha, n) * np.asarray(tau)


def default_tau_rule(upper: float = 12.0, panels: int = 32,
                     points_per_panel: int = 8,
                     endpoint_exponent: float = 0.0) -> HalfLineRule:
    """Default tau discretization: panels of width upper/panels on (0, upper),
    refined geometrically toward 0."""
    return build_finite_rule(0.0, upper, upper / panels, points_per_panel,
                             endpoint_exponent=endpoint_exponent)


def _laguerre_axis_rule(alpha: float, prof: HalfLineFunction, n_max: int,
                        tau_max: float) -> HalfLineRule:
    """r-rule resolving l_{n,tau} for every n < n_max and tau <= tau_max,
    over the extent of the profile."""
    kmax = np.sqrt(laguerre_eigenvalue(alpha, n_max - 1) * tau_max)
    if prof.support is not None:
        a, b = prof.support
        gamma = (prof.endpoint_exponent + alpha + 0.5) if a == 0.0 else 0.0
        return build_finite_rule(a, b, np.pi / kmax, endpoint_exponent=gamma)
    base = build_rule(TruncationPolicy(decay_hint=prof.decay, rate=prof.rate))
    return build_finite_rule(0.0, base.upper_cut, np.pi / kmax,
                             endpoint_exponent=prof.endpoint_exponent + alpha + 0.5)


def _axis_rules(tp: TypePair, f: PlaneFunction, n_max: int,
                tau_max: float) -> tuple[HalfLineRule, HalfLineRule]:
    """(r_rule, s_rule) resolving the Laguerre and Hankel kernels for f."""
    r_prof, s_prof = f.axis_profile(0), f.axis_profile(1)
    r_rule = _laguerre_axis_rule(tp.alpha, r_prof, n_max, tau_max)
    s_rule = rule_for_function(
        HalfLineFunction(fn=s_prof.fn, support=s_prof.support, decay=s_prof.decay,
                         rate=s_prof.rate, endpoint_exponent=tp.beta + 0.5),
        freq=tau_max)
    return r_rule, s_rule


def _liouville_kernel(beta, taus, pts):
    """(tau s)^(1/2) J_beta(tau s) as a (len(pts), len(taus)) matrix."""
    x = taus[None, :] * pts[:, None]
    return np.sqrt(x) * jv(beta, x)


def g_forward(tp: TypePair, f, n_max: int = DEFAULT_N_MAX,
              tau_rule: Optional[HalfLineRule] = None,
              r_rule: Optional[HalfLineRule] = None,
              s_rule: Optional[HalfLineRule] = None) -> SpectralData:
    """Forward transform: Hankel in s, then scaled Laguerre analysis in r.

    The inner transform is independent of n and is evaluated once on the
    (r-node, tau-node) tensor, then reused for every coefficient order.
    """
    f = as_plane_function(f)
    if tau_rule is None:
        tau_rule = default_tau_rule(endpoint_exponent=min(2.0 * tp.beta + 1.0, 0.0))
    tg, tw = tau_rule.nodes, tau_rule.weights
    if r_rule is None or s_rule is None:
        auto_r, auto_s = _axis_rules(tp, f, n_max, float(tg[-1]))
        r_rule = r_rule or auto_r
        s_rule = s_rule or auto_s
    rn, rw = r_rule.nodes, r_rule.weights
    sn, sw = s_rule.nodes, s_rule.weights

    fvals = np.asarray(f(rn[:, None], sn[None, :]))
    hankel_kernel = _liouville_kernel(tp.beta, tg, sn)         # (ns, K)
    inner = fvals @ (sw[:, None] * hankel_kernel)              # (nr, K)

    x = np.sqrt(tg)[None, :] * rn[:, None]                     # (nr, K)
    weighted = rw[:, None] * inner
    values = np.empty((n_max, len(tg)), dtype=weighted.dtype)
    for n, q in enumerate(laguerre_fn_seq(tp.alpha, x, n_max)):
        values[n] = np.sum(weighted * q, axis=0)
    values *= tg[None, :] ** 0.25
    return SpectralData(tp.alpha, tp.beta, tg, tw, values)


def g_forward_separated(tp: TypePair, f1, f2, n_max: int = DEFAULT_N_MAX,
                        tau_rule: Optional[HalfLineRule] = None) -> SpectralData:
    """Forward transform of f(r, s) = f1(r) f2(s) as a product of 1-d
    transforms."""
    from .hankel import hankel_liouville

    f1 = as_half_line_function(f1)
    f2 = as_half_line_function(f2)
    if tau_rule is None:
        tau_rule = default_tau_rule(endpoint_exponent=min(2.0 * tp.beta + 1.0, 0.0))
    tg, tw = tau_rule.nodes, tau_rule.weights
    h2 = np.asarray(hankel_liouville(tp.beta, f2, tg))
    # one shared r-rule keyed to the largest tau keeps the basis table reusable
    rule = _laguerre_axis_rule(tp.alpha, f1, n_max, float(tg[-1]))
    f1v = np.asarray(f1(rule.nodes))
    weighted = rule.weights * f1v
    x = np.sqrt(tg)[None, :] * rule.nodes[:, None]
    values = np.empty((n_max, len(tg)), dtype=weighted.dtype)
    for n, q in enumerate(laguerre_fn_seq(tp.alpha, x, n_max)):
        values[n] = weighted @ q
    values = values * (tg[None, :] ** 0.25 * h2[None, :])
    return SpectralData(tp.alpha, tp.beta, tg, tw, values)


def g_forward_hat(tp: TypePair, f, n_max: int = DEFAULT_N_MAX,
                  tau_rule: Optional[HalfLineRule] = None,
                  r_rule: Optional[HalfLineRule] = None,
                  s_rule: Optional[HalfLineRule] = None) -> SpectralData:
    """Order-exchanged transform: scaled Laguerre in r first, Hankel in s
    second.  Coincides with g_forward; the contraction order differs."""
    f = as_plane_function(f)
    if tau_rule is None:
        tau_rule = default_tau_rule(endpoint_exponent=min(2.0 * tp.beta + 1.0, 0.0))
    tg, tw = tau_rule.nodes, tau_rule.weights
    if r_rule is None or s_rule is None:
        auto_r, auto_s = _axis_rules(tp, f, n_max, float(tg[-1]))
        r_rule = r_rule or auto_r
        s_rule = s_rule or auto_s
    rn, rw = r_rule.nodes, r_rule.weights
    sn, sw = s_rule.nodes, s_rule.weights

    fvals = np.asarray(f(rn[:, None], sn[None, :]))            # (nr, ns)
    weighted_f = rw[:, None] * fvals
    hankel_kernel = sw[:, None] * _liouville_kernel(tp.beta, tg, sn)  # (ns, K)
    x = np.sqrt(tg)[None, :] * rn[:, None]                     # (nr, K)
    values = np.empty((n_max, len(tg)), dtype=fvals.dtype)
    for n, q in enumerate(laguerre_fn_seq(tp.alpha, x, n_max)):
        # Laguerre analysis of every s-slice at each tau, then the Hankel
        # contraction evaluated on the diagonal tau
        inner = weighted_f.T @ q                               # (ns, K)
        values[n] = np.sum(inner * hankel_kernel, axis=0)
    values *= tg[None, :] ** 0.25
    return SpectralData(tp.alpha, tp.beta, tg, tw, values)


def _synthesize_columns(sd: SpectralData, rs: np.ndarray) -> np.ndarray:
    """sum_n values[n, k] l_{n,tau_k}(r_j) as a (K, len(rs)) matrix."""
    x = np.sqrt(sd.tau_grid)[:, None] * rs[None, :]
    out = np.zeros((len(sd.tau_grid), len(rs)), dtype=sd.values.dtype)
    for n, q in enumerate(laguerre_fn_seq(sd.alpha, x, sd.n_max)):
        out += sd.values[n][:, None] * q
    return out * sd.tau_grid[:, None] ** 0.25


def g_inverse_grid(sd: SpectralData, rs, ss) -> np.ndarray:
    """Inverse transform evaluated on the tensor grid rs x ss."""
    rs = np.atleast_1d(np.asarray(rs, dtype=float))
    ss = np.atleast_1d(np.asarray(ss, dtype=float))
    synth = _synthesize_columns(sd, rs)                        # (K, nr)
    kern = _liouville_kernel(sd.beta, sd.tau_grid, ss)         # (ns, K)
    return synth.T @ (sd.tau_weights[:, None] * kern.T)        # (nr, ns)


def g_inverse(sd: SpectralData, points):
    """Inverse transform at scattered points [(r_1, s_1), ...]:
    synthesis over n at each grid tau, then the Hankel integral in tau."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != 2:
        raise ValueError("points must have shape (m, 2)")
    synth = _synthesize_columns(sd, pts[:, 0])                 # (K, m)
    kern = _liouville_kernel(sd.beta, sd.tau_grid, pts[:, 1])  # (m, K)
    out = np.sum(kern.T * synth * sd.tau_weights[:, None], axis=0)
    return out if out.size > 1 else out[0]


def plancherel_norm(sd: SpectralData) -> float:
    """Norm on N x (0, inf): sqrt(sum_k w_k sum_n |F(n, tau_k)|^2)."""
    return float(np.sqrt(np.sum(sd.tau_weights * np.sum(np.abs(sd.values) ** 2, axis=0))))


def apply_multiplier(sd: SpectralData, phi) -> SpectralData:
    """Multiply the data by phi(lam_n^a tau_k) entrywise."""
    phi = phi if isinstance(phi, Multiplier) else Multiplier(phi)
    lam = laguerre_eigenvalue(sd.alpha, np.arange(sd.n_max))
    symbol = lam[:, None] * sd.tau_grid[None, :]
    scaled = np.asarray(phi(symbol))
    if not np.all(np.isfinite(scaled)):
        n_bad, k_bad = np.argwhere(~np.isfinite(scaled))[0]
        raise OverflowError(
            f"multiplier is not finite at (n={n_bad}, tau={sd.tau_grid[k_bad]})")
    return SpectralData(sd.alpha, sd.beta, sd.tau_grid, sd.tau_weights,
                        scaled * sd.values)


def functional_calculus(tp: TypePair, phi, f, points,
                        n_max: int = DEFAULT_N_MAX,
                        tau_rule: Optional[HalfLineRule] = None):
    """Evaluate Phi of the self-adjoint extension applied to f at points:
    forward transform, multiply by Phi(lam_n^a tau), inverse transform."""
    sd = g_forward(tp, f, n_max=n_max, tau_rule=tau_rule)
    return g_inverse(apply_multiplier(sd, phi), points)
