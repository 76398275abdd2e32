"""
Tests du générateur de polynômes
"""

import numpy as np
import pytest

from corpus_generator import PolynomialGenerator, corpus_summary
from lower_bounds import gamma_for
from root_oracle import find_roots


def test_seed_is_reproducible():
    a = PolynomialGenerator(seed=3).generate_corpus(5)
    b = PolynomialGenerator(seed=3).generate_corpus(5)
    assert a == b


def test_random_monic_in_unit_disk(generator):
    for _ in range(50):
        p = generator.random_monic(10)
        assert p.degree == 10
        assert p.leading == 1
        assert np.all(np.abs(p.coeffs[:-1]) <= 1.0)


def test_corpus_degrees(generator):
    corpus = generator.generate_corpus(200, 3, 12)
    degrees = {p.degree for p in corpus}
    assert degrees <= set(range(3, 13))
    assert len(degrees) > 5


def test_roots_in_annulus(generator):
    p = generator.roots_in_annulus(8, 0.5, 2.0)
    moduli = np.abs(find_roots(p).roots)
    assert np.all(moduli >= 0.5 - 1e-9)
    assert np.all(moduli <= 2.0 + 1e-9)


@pytest.mark.parametrize("n", range(2, 51))
def test_basic_exclusion_extremal_root(n):
    p = PolynomialGenerator.basic_exclusion_extremal(n)
    real = [z.real for z in find_roots(p).roots if abs(z.imag) <= 1e-12 and z.real > 0]
    assert len(real) == 1
    assert 0.5 < real[0] < 0.5 * (1 + 1 / n)


@pytest.mark.parametrize("omega", [(1,), (1, 2), (2,)])
def test_omega_extremal_positive_root_tends_to_gamma(omega):
    target = gamma_for(omega)
    previous = None
    for n in (10, 20, 40):
        p = PolynomialGenerator.omega_extremal(n, omega)
        root = min(z.real for z in find_roots(p).roots if abs(z.imag) <= 1e-12 and z.real > 0)
        assert root >= target * (1 - 1e-12)
        if previous is not None:
            assert root <= previous + 1e-12
        previous = root
    assert previous == pytest.approx(target, abs=1e-3)


def test_double_quadratic_coefficients():
    assert np.allclose(PolynomialGenerator.double_quadratic(2).coeffs, [4, 0, -4, 0, 1])


def test_multiple_critical_derivative():
    p = PolynomialGenerator.multiple_critical(3, 2.0, 0.5)
    assert np.allclose(p.coeffs, [0.5, 0, 0, 0, -2 / 4, 1 / 5])


def test_summary_frame(generator):
    frame = corpus_summary(generator.generate_corpus(20))
    assert list(frame.columns) == ["degree", "max_coeff_modulus", "cauchy_radius"]
    assert len(frame) == 20
    assert (frame["cauchy_radius"] > 0).all()
