"""Half-line quadrature: truncation policies, endpoint handling, invariants."""

import numpy as np
import pytest
from scipy.special import gammaln

from grushin.quadrature import (HalfLineRule, QuadratureError, TruncationPolicy,
                                build_finite_rule, build_rule, integrate)


class TestBuildRule:
    def test_gaussian_upper_cut(self):
        rule = build_rule(TruncationPolicy(abs_tol=1e-12, decay_hint="gaussian"))
        assert rule.upper_cut >= 8.0
        assert np.exp(-rule.upper_cut**2 / 2) < 1e-12

    def test_exponential_upper_cut(self):
        rule = build_rule(TruncationPolicy(abs_tol=1e-10, decay_hint="exponential"))
        assert rule.upper_cut >= 24.0
        assert np.exp(-rule.upper_cut) < 1e-10

    def test_oscillatory_rule(self):
        # frequency bound 10 caps the panel width; validated on the
        # closed-form integral of e^-u sin(10u) = 10/101
        policy = TruncationPolicy(abs_tol=1e-12, decay_hint="algebraic_oscillatory",
                                  rate=1.0, freq_bound=10.0)
        rule = build_rule(policy)
        widths = np.diff(np.concatenate([[0.0], rule.nodes]))  # crude bound check
        val = integrate(lambda u: np.exp(-u) * np.sin(10.0 * u), rule)
        assert val == pytest.approx(10.0 / 101.0, abs=1e-12)

    def test_max_panels_failure(self):
        policy = TruncationPolicy(abs_tol=1e-12, decay_hint="algebraic_oscillatory",
                                  freq_bound=500.0, max_panels=100)
        with pytest.raises(QuadratureError):
            build_rule(policy)

    def test_points_per_panel_minimum(self):
        with pytest.raises(ValueError):
            build_rule(TruncationPolicy(), points_per_panel=3)


class TestIntegrate:
    def test_exponential(self):
        rule = build_rule(TruncationPolicy(decay_hint="exponential", abs_tol=1e-13))
        assert integrate(lambda u: np.exp(-u), rule) == pytest.approx(1.0, abs=1e-10)

    def test_gaussian(self):
        rule = build_rule(TruncationPolicy(decay_hint="gaussian", rate=np.sqrt(2.0)))
        want = np.sqrt(np.pi) / 2
        assert integrate(lambda u: np.exp(-u * u), rule) == pytest.approx(want,
                                                                          abs=1e-10)

    def test_singular_weight(self):
        # u^(2a+1) e^(-u^2) integrates to Gamma(a+1)/2; cross-checked with
        # log-gamma after the substitution v = u^2
        for a in (0.25, -0.45, -0.8):
            rule = build_rule(TruncationPolicy(
                decay_hint="gaussian", rate=np.sqrt(2.0),
                endpoint_exponent=2 * a + 1))
            got = integrate(lambda u: u ** (2 * a + 1) * np.exp(-u * u), rule)
            assert got == pytest.approx(0.5 * np.exp(gammaln(a + 1.0)), abs=1e-9)

    def test_values_array_input(self):
        rule = build_finite_rule(0.0, 1.0, 0.25)
        vals = rule.nodes**2
        assert integrate(vals, rule) == pytest.approx(1.0 / 3.0, abs=1e-14)

    def test_nonfinite_reported_with_node(self):
        rule = build_finite_rule(1.0, 2.0, 0.5)
        bad = rule.nodes[3]

        def f(u):
            out = np.ones_like(u)
            out[u == bad] = np.nan
            return out

        with pytest.raises(QuadratureError) as excinfo:
            integrate(f, rule)
        assert f"{float(bad)}" in str(excinfo.value)
        assert "index 3" in str(excinfo.value)

    def test_complex_integrand(self):
        rule = build_rule(TruncationPolicy(decay_hint="exponential"))
        got = integrate(lambda u: np.exp(-u) * (1 + 2j), rule)
        assert got == pytest.approx(1.0 + 2.0j, abs=1e-10)


class TestInvariants:
    def test_refinement_convergence(self):
        # doubling points per panel moves the three reference integrals
        # by less than the policy tolerance
        cases = [
            (lambda u: np.exp(-u), TruncationPolicy(decay_hint="exponential")),
            (lambda u: np.exp(-u * u),
             TruncationPolicy(decay_hint="gaussian", rate=np.sqrt(2.0))),
            (lambda u: u**1.5 * np.exp(-u * u),
             TruncationPolicy(decay_hint="gaussian", rate=np.sqrt(2.0),
                              endpoint_exponent=1.5)),
        ]
        for f, policy in cases:
            coarse = integrate(f, build_rule(policy, points_per_panel=8))
            fine = integrate(f, build_rule(policy, points_per_panel=16))
            assert abs(coarse - fine) < policy.abs_tol

    def test_positivity(self):
        rule = build_rule(TruncationPolicy(decay_hint="gaussian"))
        assert integrate(lambda u: np.exp(-u * u / 2) + 0.01 * u, rule) > 0.0
        assert np.all(rule.weights > 0.0)

    def test_linearity(self):
        rule = build_rule(TruncationPolicy(decay_hint="gaussian"))
        f = lambda u: np.exp(-u * u / 2)
        g = lambda u: u * np.exp(-u * u / 3)
        a, b = 2.7, -1.3
        lhs = integrate(lambda u: a * f(u) + b * g(u), rule)
        rhs = a * integrate(f, rule) + b * integrate(g, rule)
        assert lhs == pytest.approx(rhs, rel=1e-13)


class TestRuleValidation:
    def test_increasing_nodes_required(self):
        with pytest.raises(ValueError):
            HalfLineRule(np.array([1.0, 0.5]), np.array([1.0, 1.0]), upper_cut=2.0)

    def test_positive_weights_required(self):
        with pytest.raises(ValueError):
            HalfLineRule(np.array([0.5, 1.0]), np.array([1.0, -1.0]), upper_cut=2.0)

    def test_upper_cut_covers_nodes(self):
        with pytest.raises(ValueError):
            HalfLineRule(np.array([0.5, 1.0]), np.array([1.0, 1.0]), upper_cut=0.9)

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            TruncationPolicy(abs_tol=0.0)
        with pytest.raises(ValueError):
            TruncationPolicy(decay_hint="bogus")
        with pytest.raises(ValueError):
            TruncationPolicy(endpoint_exponent=-1.0)

    def test_finite_rule_validation(self):
        with pytest.raises(ValueError):
            build_finite_rule(2.0, 1.0, 0.1)
        with pytest.raises(ValueError):
            build_finite_rule(0.0, 1.0, -0.1)
