"""Special-function tests against independent series oracles.

The power series is the oracle where it is numerically sound (small x);
past that, mpmath evaluates the same functions in 30-digit arithmetic,
independent of the scipy backend under test.
"""

import math

import mpmath
import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from grushin import specfun
from grushin.quadrature import build_finite_rule

mpmath.mp.dps = 30


def bessel_j_series(nu, x, terms=60):
    """Power-series oracle: sum (-1)^k (x/2)^(2k+nu) / (k! Gamma(k+nu+1))."""
    total = 0.0
    for k in range(terms):
        total += (-1.0) ** k * (0.5 * x) ** (2 * k + nu) / (
            math.gamma(k + 1) * math.gamma(k + nu + 1))
    return total


def bessel_i_series(nu, x, terms=60):
    total = 0.0
    for k in range(terms):
        total += (0.5 * x) ** (2 * k + nu) / (
            math.gamma(k + 1) * math.gamma(k + nu + 1))
    return total


class TestBesselJ:
    def test_at_zero(self):
        assert specfun.bessel_j(0.0, 0.0) == 1.0
        assert specfun.bessel_j(0.7, 0.0) == 0.0

    def test_half_order_closed_form(self):
        y = np.pi / 2
        assert specfun.bessel_j(0.5, y) == pytest.approx(2.0 / np.pi, abs=1e-12)

    def test_against_series_oracle(self):
        # frozen value from the series oracle summed to machine tolerance
        assert specfun.bessel_j(1.0, 1.0) == pytest.approx(0.44005058574493355,
                                                           abs=1e-14)
        for nu in (-0.5, 0.0, 0.3, 1.7):
            for x in (0.1, 1.0, 4.0, 9.0):
                want = bessel_j_series(nu, x)
                assert specfun.bessel_j(nu, x) == pytest.approx(want, rel=1e-10)

    def test_large_argument_accuracy(self):
        # the float series cancels catastrophically out here; mpmath in
        # 30-digit arithmetic is the oracle.  Relative accuracy away from
        # zeros, absolute beyond x=50.
        for nu in (0.0, 0.4, 1.5):
            for x in (12.0, 30.0, 49.0):
                want = float(mpmath.besselj(nu, x))
                got = specfun.bessel_j(nu, x)
                if abs(want) > 1e-2:
                    assert got == pytest.approx(want, rel=1e-10)
                else:
                    assert got == pytest.approx(want, abs=1e-10)
        assert abs(specfun.bessel_j(0.3, 200.0)
                   - float(mpmath.besselj(0.3, 200.0))) < 1e-10

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            specfun.bessel_j(0.5, -1.0)
        with pytest.raises(ValueError):
            specfun.bessel_j(-0.5, 0.0)
        with pytest.raises(ValueError):
            specfun.bessel_j(-1.5, 1.0)


class TestBesselI:
    def test_at_zero(self):
        assert specfun.bessel_i(0.0, 0.0) == 1.0

    def test_half_order_closed_form(self):
        want = np.sqrt(2.0 / np.pi) * np.sinh(1.0)
        assert specfun.bessel_i(0.5, 1.0) == pytest.approx(want, abs=1e-12)

    def test_against_series_oracle(self):
        # the I series has positive terms, so no cancellation; plain float
        # works until Gamma overflows
        for nu in (-0.5, 0.0, 0.8, 2.1):
            for x in (0.5, 3.0, 10.0, 28.0):
                want = bessel_i_series(nu, x, terms=120)
                assert specfun.bessel_i(nu, x) == pytest.approx(want, rel=1e-10)

    def test_scaled_variant(self):
        # frozen: series oracle times e^-10
        assert specfun.bessel_i_scaled(0.0, 10.0) == pytest.approx(
            0.12783333716342862, rel=1e-12)
        # scaled form stays finite and accurate far beyond plain-I overflow
        for x in (100.0, 450.0, 700.0):
            got = specfun.bessel_i_scaled(0.3, x)
            assert np.isfinite(got) and got > 0.0
        # cross-check against the asymptotic 1/sqrt(2 pi x) (first order)
        x = 700.0
        lead = 1.0 / np.sqrt(2.0 * np.pi * x)
        assert specfun.bessel_i_scaled(0.0, x) == pytest.approx(lead, rel=1e-3)


class TestNormalizedKernels:
    def test_continuity_at_zero(self):
        for nu in (-0.5, 0.2, 1.3):
            const = 2.0**-nu / math.gamma(nu + 1.0)
            assert specfun.bessel_j_normalized(nu, 0.0) == pytest.approx(const)
            assert specfun.bessel_i_normalized(nu, 0.0) == pytest.approx(const)

    def test_matches_ratio_at_moderate_x(self):
        x = np.array([1e-7, 1e-5, 0.01, 1.0, 7.0])
        for nu in (-0.4, 0.6):
            want_j = np.array([bessel_j_series(nu, xi) / xi**nu for xi in x])
            got_j = specfun.bessel_j_normalized(nu, x)
            assert np.allclose(got_j, want_j, rtol=1e-10)


class TestLaguerrePoly:
    def test_degree_zero_is_one(self):
        for alpha in (-0.9, 0.0, 2.5):
            assert specfun.laguerre_poly(0, alpha, 17.3) == 1.0

    def test_degree_one_formula(self):
        # alpha + 1 - x
        assert specfun.laguerre_poly(1, 0.5, 2.0) == pytest.approx(-0.5)

    def test_against_scipy_oracle(self):
        x = np.linspace(0.0, 30.0, 40)
        for n in (2, 5, 17):
            for alpha in (-0.5, 0.0, 1.3):
                want = eval_genlaguerre(n, alpha, x)
                got = specfun.laguerre_poly(n, alpha, x)
                assert np.allclose(got, want, rtol=1e-10, atol=1e-10)

    def test_weighted_integral_orthogonality(self):
        # int L_3(u) e^-u du over (0, inf) vanishes (degree-3 against weight 1)
        rule = build_finite_rule(0.0, 40.0, 0.5)
        val = np.dot(rule.weights,
                     specfun.laguerre_poly(3, 0.0, rule.nodes) * np.exp(-rule.nodes))
        assert abs(val) < 1e-10


class TestLaguerreFn:
    def test_ground_state_value(self):
        got = specfun.laguerre_fn(specfun.LaguerreIndex(0, 0.0, 1.0), 1.0)
        assert got == pytest.approx(np.sqrt(2.0) * np.exp(-0.5), rel=1e-14)

    def test_unit_norm(self):
        idx = specfun.LaguerreIndex(2, 0.3, 1.7)
        rule = build_finite_rule(0.0, 12.0, 0.05)
        vals = specfun.laguerre_fn(idx, rule.nodes)
        assert np.dot(rule.weights, vals**2) == pytest.approx(1.0, abs=1e-10)

    def test_scaling_relation(self):
        # l_{n,4}(r) = sqrt(2) l_{n,1}(2r)
        r = np.linspace(0.2, 3.0, 17)
        for n in (0, 3):
            a = specfun.laguerre_fn(specfun.LaguerreIndex(n, 0.6, 4.0), r)
            b = specfun.laguerre_fn(specfun.LaguerreIndex(n, 0.6, 1.0), 2.0 * r)
            assert np.allclose(a, np.sqrt(2.0) * b, rtol=1e-12)

    def test_matches_direct_formula(self):
        r = np.array([0.3, 1.1, 2.4])
        for n, alpha, tau in ((4, 0.7, 1.3), (25, -0.4, 0.5)):
            c = np.exp(0.5 * (np.log(2.0) + math.lgamma(n + 1)
                              - math.lgamma(n + alpha + 1)))
            x = np.sqrt(tau) * r
            want = tau**0.25 * c * eval_genlaguerre(n, alpha, x * x) \
                * np.exp(-x * x / 2) * x ** (alpha + 0.5)
            got = specfun.laguerre_fn(specfun.LaguerreIndex(n, alpha, tau), r)
            assert np.allclose(got, want, rtol=1e-11)

    def test_underflow_returns_zero(self):
        big = specfun.laguerre_fn(specfun.LaguerreIndex(1, 0.5, 1.0), 60.0)
        assert big == 0.0

    def test_deep_scaling_recovers(self):
        # values recover from an underflowed start once n is large enough
        x = np.array([55.0])
        vals = list(specfun.laguerre_fn_seq(0.0, x, 900))
        assert vals[0][0] == 0.0
        assert abs(vals[820][0]) > 1e-8  # past the turning point 4n > x^2

    def test_recurrence_against_direct_high_order(self):
        # the n = 200 member straight from the recurrence vs the direct
        # normalized-polynomial formula (log-gamma normalization)
        import math as m
        alpha, n = 0.7, 200
        x = np.array([0.5, 3.0, 11.0, 19.0, 27.0])
        got = None
        for k, q in enumerate(specfun.laguerre_fn_seq(alpha, x, n + 1)):
            if k == n:
                got = q
        c = np.exp(0.5 * (np.log(2.0) + m.lgamma(n + 1) - m.lgamma(n + alpha + 1)))
        want = c * eval_genlaguerre(n, alpha, x * x) * np.exp(-x * x / 2) \
            * x ** (alpha + 0.5)
        assert np.allclose(got, want, rtol=1e-8, atol=1e-12)

    def test_rejects_nonpositive_argument(self):
        with pytest.raises(ValueError):
            specfun.laguerre_fn(specfun.LaguerreIndex(0, 0.0, 1.0), 0.0)


class TestLogGamma:
    def test_values(self):
        assert specfun.log_gamma(1.0) == 0.0
        assert specfun.log_gamma(0.5) == pytest.approx(np.log(np.sqrt(np.pi)),
                                                       rel=1e-12)
        assert specfun.log_gamma(5.0) == pytest.approx(np.log(24.0), rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            specfun.log_gamma(0.0)
        with pytest.raises(ValueError):
            specfun.log_gamma(-3.2)


class TestValidation:
    def test_order_type(self):
        with pytest.raises(ValueError):
            specfun.Order(-1.0)
        assert specfun.Order(-0.99).nu == -0.99

    def test_laguerre_index(self):
        with pytest.raises(ValueError):
            specfun.LaguerreIndex(-1, 0.0, 1.0)
        with pytest.raises(ValueError):
            specfun.LaguerreIndex(0, -1.5, 1.0)
        with pytest.raises(ValueError):
            specfun.LaguerreIndex(0, 0.0, 0.0)

    def test_orders_accept_order_objects(self):
        assert specfun.bessel_j(specfun.Order(0.5), 1.0) == specfun.bessel_j(0.5, 1.0)

    def test_eigenvalue(self):
        assert specfun.laguerre_eigenvalue(0.5, 3) == 2.0 * (6 + 0.5 + 1)
