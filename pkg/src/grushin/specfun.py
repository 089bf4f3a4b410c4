"""Special functions used by every transform and kernel.

Bessel J_nu and I_nu for real order nu > -1, their small-argument normalized
forms J_nu(x)/x^nu and I_nu(x)/x^nu, Laguerre polynomials, and the
(scaled) Laguerre functions of Hermite type

    l_n^a(x)      = c_{n,a} L_n^a(x^2) exp(-x^2/2) x^(a+1/2),
    l_{n,tau}^a(r) = tau^(1/4) l_n^a(sqrt(tau) r),

with c_{n,a} = (2 Gamma(n+1)/Gamma(n+a+1))^(1/2).  The scaled functions form
an orthonormal basis of L^2(0, inf) and are eigenfunctions of
-d^2/dr^2 + (a^2-1/4)/r^2 + tau^2 r^2 with eigenvalues lam_n^a * tau,
lam_n^a = 2(2n+a+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np
from scipy import special as sp

__all__ = [
    "Order",
    "LaguerreIndex",
    "log_gamma",
    "bessel_j",
    "bessel_i",
    "bessel_i_scaled",
    "bessel_j_normalized",
    "bessel_i_normalized",
    "laguerre_poly",
    "laguerre_fn",
    "laguerre_fn_seq",
    "laguerre_eigenvalue",
]


@dataclass(frozen=True)
class Order:
    """Real order parameter, restricted to nu > -1."""

    nu: float

    def __post_init__(self):
        if not np.isfinite(self.nu) or self.nu <= -1.0:
            raise ValueError(f"order must be a finite real > -1, got {self.nu}")


@dataclass(frozen=True)
class LaguerreIndex:
    """Index (n, alpha, tau) of a scaled Laguerre function of Hermite type."""

    n: int
    alpha: float
    tau: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise ValueError(f"n must be a nonnegative integer, got {self.n}")
        if self.alpha <= -1.0:
            raise ValueError(f"alpha must be > -1, got {self.alpha}")
        if self.tau <= 0.0:
            raise ValueError(f"tau must be > 0, got {self.tau}")


def _order_value(nu) -> float:
    nu = nu.nu if isinstance(nu, Order) else float(nu)
    if not np.isfinite(nu) or nu <= -1.0:
        raise ValueError(f"order must be a finite real > -1, got {nu}")
    return nu


def log_gamma(x):
    """log Gamma(x) for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma requires x > 0")
    out = sp.gammaln(x)
    return float(out) if out.ndim == 0 else out


def laguerre_eigenvalue(alpha, n):
    """Eigenvalue lam_n^a = 2(2n + a + 1) of the Laguerre-type operator."""
    alpha = _order_value(alpha)
    return 2.0 * (2.0 * np.asarray(n) + alpha + 1.0)


def _check_bessel_args(nu, x):
    nu = _order_value(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("bessel argument must be >= 0")
    if nu < 0.0 and np.any(x == 0.0):
        raise ValueError(f"bessel function of order {nu} diverges at x = 0")
    return nu, x


def _at_zero(nu, x, values):
    # limit value at x = 0: 1 for nu = 0, 0 for nu > 0 (nu < 0 rejected earlier)
    if np.any(x == 0.0):
        values = np.where(x == 0.0, 1.0 if nu == 0.0 else 0.0, values)
    return values


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x), nu > -1, x >= 0."""
    nu, x = _check_bessel_args(nu, x)
    out = _at_zero(nu, x, sp.jv(nu, x))
    return float(out) if np.ndim(out) == 0 else out


def bessel_i(nu, x):
    """Modified Bessel function of the first kind I_nu(x), nu > -1, x >= 0."""
    nu, x = _check_bessel_args(nu, x)
    out = _at_zero(nu, x, sp.iv(nu, x))
    return float(out) if np.ndim(out) == 0 else out


def bessel_i_scaled(nu, x):
    """Overflow-safe exp(-x) I_nu(x); pairs with decaying exponentials."""
    nu, x = _check_bessel_args(nu, x)
    out = _at_zero(nu, x, sp.ive(nu, x))
    return float(out) if np.ndim(out) == 0 else out


_SMALL_ARG = 1e-6


def _normalized_series(nu, x):
    # J_nu(x)/x^nu = 2^-nu/Gamma(nu+1) (1 - y/(nu+1) + y^2/(2(nu+1)(nu+2)) - ...),
    # y = x^2/4; three terms leave a relative error ~ y^3/6 < 1e-40 for x < 1e-6
    y = 0.25 * x * x
    c0 = np.exp(-nu * np.log(2.0) - sp.gammaln(nu + 1.0))
    return c0 * (1.0 - y / (nu + 1.0) + y * y / (2.0 * (nu + 1.0) * (nu + 2.0)))


def bessel_j_normalized(nu, x):
    """J_nu(x)/x^nu, extended by continuity to 2^-nu/Gamma(nu+1) at x = 0."""
    nu = _order_value(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("bessel argument must be >= 0")
    small = x < _SMALL_ARG
    xs = np.where(small, 1.0, x)
    with np.errstate(invalid="ignore"):
        out = np.where(small, _normalized_series(nu, x), sp.jv(nu, xs) / xs**nu)
    return float(out) if out.ndim == 0 else out


def bessel_i_normalized(nu, x):
    """I_nu(x)/x^nu, extended by continuity to 2^-nu/Gamma(nu+1) at x = 0."""
    nu = _order_value(nu)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("bessel argument must be >= 0")
    small = x < _SMALL_ARG
    xs = np.where(small, 1.0, x)
    # same series as for J but with all plus signs
    y = 0.25 * x * x
    c0 = np.exp(-nu * np.log(2.0) - sp.gammaln(nu + 1.0))
    series = c0 * (1.0 + y / (nu + 1.0) + y * y / (2.0 * (nu + 1.0) * (nu + 2.0)))
    with np.errstate(invalid="ignore"):
        out = np.where(small, series, sp.iv(nu, xs) / xs**nu)
    return float(out) if out.ndim == 0 else out


def laguerre_poly(n, alpha, x):
    """Laguerre polynomial L_n^alpha(x) by the three-term recurrence in n."""
    if n < 0 or int(n) != n:
        raise ValueError(f"degree must be a nonnegative integer, got {n}")
    alpha = _order_value(alpha)
    x = np.asarray(x, dtype=float)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    for k in range(n):
        prev, cur = cur, ((2 * k + alpha + 1.0 - x) * cur - (k + alpha) * prev) / (k + 1.0)
    return float(cur) if cur.ndim == 0 else cur


def laguerre_fn_seq(alpha, x, n_max) -> Iterator[np.ndarray]:
    """Yield l_0^a(x), ..., l_{n_max-1}^a(x) for an array of arguments x > 0.

    Runs the orthonormal three-term recurrence directly on the weighted
    functions, carrying a per-element log-scale so that intermediate values
    neither overflow nor underflow; entries whose true magnitude is below
    the double-precision floor come out as exact zeros.

    Each yielded array is freshly allocated and safe to retain.
    """
    alpha = _order_value(alpha)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("laguerre functions require argument > 0")
    x2 = x * x
    g0 = 0.5 * np.log(2.0) - 0.5 * sp.gammaln(alpha + 1.0) - 0.5 * x2 \
        + (alpha + 0.5) * np.log(x)
    off = np.where(g0 < -600.0, g0 + 300.0, 0.0)
    prev = np.zeros_like(x2)
    cur = np.exp(g0 - off)
    rescale = 300.0 * np.log(10.0)
    for n in range(int(n_max)):
        yield cur * np.exp(off)
        c_up = np.sqrt((n + 1.0) * (n + alpha + 1.0))
        c_dn = np.sqrt(n * (n + alpha)) if n > 0 else 0.0
        prev, cur = cur, ((2 * n + alpha + 1.0 - x2) * cur - c_dn * prev) / c_up
        if np.abs(cur).max(initial=0.0) > 1e150:
            big = np.abs(cur) > 1e150
            prev = np.where(big, prev * 1e-300, prev)
            cur = np.where(big, cur * 1e-300, cur)
            off = np.where(big, off + rescale, off)


def laguerre_fn(idx: LaguerreIndex, r):
    """Scaled Laguerre function of Hermite type l_{n,tau}^{a}(r), r > 0."""
    x = np.sqrt(idx.tau) * np.asarray(r, dtype=float)
    for n, val in enumerate(laguerre_fn_seq(idx.alpha, x, idx.n + 1)):
        if n == idx.n:
            out = idx.tau**0.25 * val
            return float(out) if out.ndim == 0 else out
    raise AssertionError("unreachable")
