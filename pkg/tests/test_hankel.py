"""Hankel transform tests: closed-form values, unitarity, self-inversion."""

import numpy as np
import pytest

from grushin import hankel
from grushin.functions import smooth_bump
from grushin.quadrature import build_finite_rule


class TestModifiedForm:
    def test_cosine_transform_at_zero(self):
        # order -1/2 is the cosine transform; at tau = 0 it integrates f
        # against the constant sqrt(2/pi)
        prof = hankel.HalfLineFunction(lambda u: np.exp(-u), decay="exponential")
        got = hankel.hankel_modified(-0.5, prof, [0.0])
        assert got == pytest.approx(np.sqrt(2.0 / np.pi), abs=1e-10)

    def test_cosine_transform_of_exponential(self):
        # int e^-u cos(tau u) du = 1/(1+tau^2)
        prof = hankel.HalfLineFunction(lambda u: np.exp(-u), decay="exponential")
        taus = np.array([0.5, 1.0, 2.0])
        got = hankel.hankel_modified(-0.5, prof, taus)
        want = np.sqrt(2.0 / np.pi) / (1.0 + taus**2)
        assert np.allclose(got, want, atol=1e-10)

    def test_gaussian_is_fixed_point(self):
        prof = hankel.HalfLineFunction(lambda u: np.exp(-u * u / 2),
                                       decay="gaussian")
        taus = np.array([0.5, 1.0, 2.0])
        got = hankel.hankel_modified(0.3, prof, taus)
        assert np.allclose(got, np.exp(-taus**2 / 2), atol=1e-10)

    def test_gaussian_fixed_point_near_boundary_order(self):
        # the measure u^(2a+1) at a = -0.9 is strongly singular at zero; the
        # endpoint-adapted rule still integrates it
        prof = hankel.HalfLineFunction(lambda u: np.exp(-u * u / 2),
                                       decay="gaussian")
        taus = np.array([0.0, 0.7, 1.5])
        got = hankel.hankel_modified(-0.9, prof, taus)
        assert np.allclose(got, np.exp(-taus**2 / 2), atol=1e-9)

    def test_double_application_returns_gaussian(self):
        alpha = -0.5
        taus = build_finite_rule(0.0, 40.0, np.pi / (4 * 8.0)).nodes
        rule = hankel.rule_for_function(
            hankel.HalfLineFunction(lambda u: np.exp(-u * u / 2)),
            freq=float(taus.max()))
        once = hankel.hankel_modified(alpha, lambda u: np.exp(-u * u / 2),
                                      taus, rule=rule)
        xs = np.linspace(0.1, 3.0, 20)
        outer = build_finite_rule(0.0, float(taus.max()), np.pi / (4 * 3.0))
        once_at_outer = hankel.hankel_modified(
            alpha, lambda u: np.exp(-u * u / 2), outer.nodes, rule=rule)
        twice = hankel.hankel_modified_inverse(alpha, np.asarray(once_at_outer),
                                               xs, rule=outer)
        assert np.allclose(twice, np.exp(-xs**2 / 2), atol=1e-8)


class TestLiouvilleForm:
    def test_power_gaussian_fixed_point(self):
        # beta = -0.8 puts an integrable u^(-0.3) singularity at the origin
        for beta in (-0.8, -0.3, 0.5, 1.2):
            prof = hankel.HalfLineFunction(
                lambda s, b=beta: s ** (b + 0.5) * np.exp(-s * s / 2),
                decay="gaussian", endpoint_exponent=beta + 0.5)
            taus = np.array([0.4, 1.0, 1.9, 3.3])
            got = hankel.hankel_liouville(beta, prof, taus)
            want = taus ** (beta + 0.5) * np.exp(-taus**2 / 2)
            assert np.allclose(got, want, atol=1e-10)

    def test_sine_kernel_closed_form(self):
        # at order 1/2 the kernel reduces to sqrt(2/pi) sin(tau u)
        prof = hankel.HalfLineFunction(lambda u: np.exp(-u), decay="exponential")
        taus = np.array([0.3, 1.0, 4.0])
        got = hankel.hankel_liouville(0.5, prof, taus)
        want = np.sqrt(2.0 / np.pi) * taus / (1.0 + taus**2)
        assert np.allclose(got, want, atol=1e-10)

    def test_tau_zero_rejected(self):
        with pytest.raises(ValueError):
            hankel.hankel_liouville(0.5, lambda u: np.exp(-u), [0.0])

    def test_zero_function_maps_to_zero(self):
        prof = hankel.HalfLineFunction(lambda u: np.zeros_like(u),
                                       support=(0.5, 1.5))
        got = hankel.hankel_liouville(0.4, prof, [1.0, 2.0])
        assert np.all(got == 0.0)

    def test_sampled_values_require_rule(self):
        with pytest.raises(ValueError):
            hankel.hankel_liouville(0.5, np.ones(4), [1.0])


@pytest.mark.parametrize("beta", [-0.5, 0.0, 0.5, 1.3])
def test_self_inverse(beta):
    """H'(H' f) recovers f in L^2 for a smooth compactly supported bump."""
    g = smooth_bump(1.5, 1.0)
    prof = hankel.HalfLineFunction(g, support=(0.5, 2.5))
    trule = build_finite_rule(0.0, 150.0, np.pi / (4 * 2.5))
    fw = hankel.hankel_liouville(beta, prof, trule.nodes)
    xr = build_finite_rule(0.05, 3.5, 0.05)
    back = hankel.hankel_liouville_inverse(beta, np.asarray(fw), xr.nodes,
                                           rule=trule)
    num = np.sqrt(np.sum(xr.weights * (back - g(xr.nodes)) ** 2))
    den = np.sqrt(np.sum(xr.weights * g(xr.nodes) ** 2))
    assert num / den < 1e-5


@pytest.mark.parametrize("beta", [-0.5, 0.0, 0.7, 1.3])
def test_unitarity(beta):
    g = smooth_bump(1.5, 0.5)
    prof = hankel.HalfLineFunction(g, support=(1.0, 2.0))
    trule = build_finite_rule(0.0, 150.0, np.pi / (4 * 2.0))
    fw = np.asarray(hankel.hankel_liouville(beta, prof, trule.nodes))
    urule = hankel.rule_for_function(prof, freq=0.0)
    n2_in = float(np.dot(urule.weights, g(urule.nodes) ** 2))
    n2_out = float(np.dot(trule.weights, fw**2))
    assert abs(n2_out - n2_in) / n2_in < 1e-6


def test_conjugation_between_forms():
    """The Liouville form equals u^(a+1/2)-conjugation of the modified form."""
    g = smooth_bump(1.5, 0.8)
    taus = np.array([0.3, 1.0, 2.7, 5.0])
    for alpha in (-0.5, 0.4, 1.1):
        rule = build_finite_rule(0.7, 2.3, np.pi / (4 * taus.max()))
        direct = hankel.hankel_liouville(
            alpha, hankel.HalfLineFunction(g, support=(0.7, 2.3)), taus, rule=rule)
        modified = hankel.hankel_modified(
            alpha,
            hankel.HalfLineFunction(lambda u, a=alpha: g(u) * u ** (-a - 0.5),
                                    support=(0.7, 2.3)),
            taus, rule=rule)
        conj = taus ** (alpha + 0.5) * np.asarray(modified)
        assert np.allclose(conj, direct, atol=1e-8)


def test_negative_tau_rejected():
    with pytest.raises(ValueError):
        hankel.hankel_modified(0.5, lambda u: np.exp(-u), [-1.0])
