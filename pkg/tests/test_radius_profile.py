"""
Tests du profil de rayons
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conjecture_lab import counterexample_polynomial
from corpus_generator import PolynomialGenerator
from exceptions import PolynomialError
from poly_core import Polynomial
from radius_profile import coefficient_vanishes, rho_family_counterexample, rho_profile
from root_oracle import critical_points


def test_double_quadratic_at_origin():
    profile = rho_profile(PolynomialGenerator.double_quadratic(2), 0)
    assert profile.radius(2) == pytest.approx(1.0)
    assert profile.rho_min_from2 == pytest.approx(1.0)
    assert profile.argmin_from2 == 2
    assert math.isinf(profile.radius(1))
    assert profile.is_critical


@pytest.mark.parametrize("n", [3, 10, 100])
def test_counterexample_at_roots_of_unity(n):
    p = PolynomialGenerator.counterexample(n)
    for j in (0, 1, n - 1):
        center = np.exp(2j * np.pi * j / n)
        profile = rho_profile(p, center)
        assert profile.radius(2) == pytest.approx(math.sqrt(2 / (n + 1)), rel=1e-10)


def test_shifted_square_corrected_values():
    profile = rho_profile(Polynomial([4, -4, 1]), 0)
    assert profile.rho_k == pytest.approx((1.0, 2.0))
    assert profile.rho_min_full == pytest.approx(1.0)
    assert profile.argmin_full == 1
    assert not profile.is_critical


def test_degenerate_center():
    profile = rho_profile(Polynomial([-1, 0, 1]), 1)
    assert profile.degenerate
    assert profile.rho_min_from2 == 0.0
    assert profile.rho_min_full == 0.0


def test_degree_too_low():
    with pytest.raises(PolynomialError):
        rho_profile(Polynomial([1, 1]), 0)


def test_radius_index_range():
    profile = rho_profile(Polynomial([-1, 0, 1]), 0)
    with pytest.raises(IndexError):
        profile.radius(3)


def test_coefficient_vanishes_uses_relative_scale():
    p = Polynomial([1e-20, 1e-8, 1.0])
    e = rho_profile(p, 0).expansion
    assert coefficient_vanishes(e, 0)
    assert not coefficient_vanishes(e, 1)
    assert coefficient_vanishes(e, 1, rtol=1e-6)


@pytest.mark.parametrize("n", [100, 1000])
def test_large_family_members_are_not_degenerate(n):
    # |b_k| ~ C(n+1, k) au centre 1 : l'échelle de nullité suit les coefficients d'origine
    profile = rho_profile(counterexample_polynomial(n), 1)
    assert not profile.degenerate
    assert profile.is_critical
    assert profile.rho_min_from2 > 0


def test_off_critical_center_of_large_member():
    profile = rho_profile(counterexample_polynomial(100), 0.5 + 0.5j)
    assert abs(profile.expansion.b[1]) == pytest.approx(101, rel=1e-6)
    assert not profile.is_critical
    assert not profile.degenerate


def test_oracle_critical_points_of_large_member_are_critical():
    p = counterexample_polynomial(100)
    for cp in critical_points(p)[:10]:
        profile = rho_profile(p, cp.location)
        assert profile.is_critical
        assert not profile.degenerate


def test_high_degree_profile_is_finite():
    # |b_k| ~ C(1001, k) dépasse 1e299 : calcul en logarithmes
    profile = rho_profile(PolynomialGenerator.counterexample(1000), 1)
    assert all(math.isfinite(r) and r > 0 for r in profile.rho_k[1:])
    assert profile.radius(2) == pytest.approx(math.sqrt(2 / 1001), rel=1e-10)


@pytest.mark.parametrize("n, k, expected", [
    (3, 2, math.sqrt(0.5)),
    (10, 2, math.sqrt(2 / 11)),
    (5, 5, (5 / 6) ** 0.2),
])
def test_closed_form(n, k, expected):
    assert rho_family_counterexample(n, k) == pytest.approx(expected, rel=1e-12)


def test_closed_form_matches_profile():
    p = PolynomialGenerator.counterexample(5)
    profile = rho_profile(p, 1)
    for k in range(2, 7):
        assert profile.radius(k) == pytest.approx(rho_family_counterexample(5, k), rel=1e-12)


def test_closed_form_range():
    with pytest.raises(ValueError):
        rho_family_counterexample(5, 1)
    with pytest.raises(ValueError):
        rho_family_counterexample(5, 7)


_complex = st.complex_numbers(min_magnitude=0.1, max_magnitude=3.0, allow_nan=False, allow_infinity=False)


@given(scale=_complex)
@settings(max_examples=30, deadline=None)
def test_profile_invariant_under_scaling_of_p(scale):
    p = Polynomial([0.5 - 1j, 2.0, -0.3j, 1.0, 0.7])
    base = rho_profile(p, 0.2 + 0.1j)
    scaled = rho_profile(Polynomial(scale * p.coeffs), 0.2 + 0.1j)
    assert np.allclose(base.rho_k, scaled.rho_k, rtol=1e-10)


@given(shift=_complex)
@settings(max_examples=30, deadline=None)
def test_profile_invariant_under_translation(shift):
    coeffs = np.array([0.5 - 1j, 2.0, -0.3j, 1.0, 0.7])
    center = 0.2 + 0.1j
    base = rho_profile(Polynomial(coeffs), center)
    # q(z) = p(z − shift), recentré en center + shift
    moved = rho_profile(rho_profile(Polynomial(coeffs), -shift).expansion.as_polynomial(), center + shift)
    assert np.allclose(base.rho_k, moved.rho_k, rtol=1e-8)


@given(factor=st.floats(min_value=0.2, max_value=5.0))
@settings(max_examples=30, deadline=None)
def test_profile_scales_under_dilation(factor):
    coeffs = np.array([0.5 - 1j, 2.0, -0.3j, 1.0, 0.7])
    center = 0.2 + 0.1j
    base = rho_profile(Polynomial(coeffs), center)
    # q(z) = p(z / factor) : les rayons sont multipliés par factor
    dilated = Polynomial(coeffs / factor ** np.arange(len(coeffs)))
    moved = rho_profile(dilated, center * factor)
    assert np.allclose(moved.rho_k, factor * np.asarray(base.rho_k), rtol=1e-9)
