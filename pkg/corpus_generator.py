"""
📊 Générateur de polynômes RootBounds
Corpus aléatoires et familles extrémales pour les balayages et les tests
"""

import logging
from typing import Iterable, List

import numpy as np
import pandas as pd
from numpy.polynomial import polynomial as npoly

from config import DEFAULT_RANDOM_COUNT, DEFAULT_SEED
from conjecture_lab import counterexample_polynomial
from poly_core import Polynomial
from root_oracle import cauchy_radius

logger = logging.getLogger(__name__)


class PolynomialGenerator:
    """Générateur de polynômes à graine fixe"""

    def __init__(self, seed: int = DEFAULT_SEED):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def _unit_disk(self, size: int) -> np.ndarray:
        # Uniforme dans le disque : module √U, argument uniforme
        radius = np.sqrt(self.rng.uniform(0.0, 1.0, size))
        angle = self.rng.uniform(0.0, 2.0 * np.pi, size)
        return radius * np.exp(1j * angle)

    def random_monic(self, degree: int) -> Polynomial:
        """Polynôme unitaire, coefficients uniformes dans le disque unité"""
        if degree < 1:
            raise ValueError(f"degree {degree} < 1")
        return Polynomial(np.append(self._unit_disk(degree), 1.0))

    def roots_in_annulus(self, degree: int, inner: float, outer: float) -> Polynomial:
        """Polynôme unitaire dont les racines sont tirées dans inner ≤ |z| ≤ outer"""
        if not 0.0 <= inner <= outer:
            raise ValueError(f"invalid annulus [{inner}, {outer}]")
        radius = np.sqrt(self.rng.uniform(inner ** 2, outer ** 2, degree))
        angle = self.rng.uniform(0.0, 2.0 * np.pi, degree)
        return Polynomial(npoly.polyfromroots(radius * np.exp(1j * angle)))

    # ===== FAMILLES EXTRÉMALES =====

    @staticmethod
    def counterexample(n: int) -> Polynomial:
        return counterexample_polynomial(n)

    @staticmethod
    def basic_exclusion_extremal(n: int) -> Polynomial:
        """Σ_{i=1}^n z^i − 1, racine réelle dans (1/2, (1 + 1/n)/2)"""
        coeffs = np.ones(n + 1)
        coeffs[0] = -1.0
        return Polynomial(coeffs)

    @staticmethod
    def omega_extremal(n: int, omega: Iterable[int]) -> Polynomial:
        """1 − Σ_{i∉Ω} z^i : condition exacte en 0 (ε = 0), racine positive → γ(Ω, 0)"""
        omega = set(omega)
        coeffs = -np.ones(n + 1)
        coeffs[0] = 1.0
        for i in omega:
            coeffs[i] = 0.0
        return Polynomial(coeffs)

    @staticmethod
    def double_quadratic(m: int) -> Polynomial:
        """(z² − m)^m"""
        return Polynomial(npoly.polypow([-float(m), 0.0, 1.0], m))

    @staticmethod
    def shifted_power(n: int) -> Polynomial:
        """(z − n)^n"""
        return Polynomial(npoly.polypow([-float(n), 1.0], n))

    @staticmethod
    def binomial_power(d: int, c: complex, m: int) -> Polynomial:
        """(z^d − c)^m"""
        base = np.zeros(d + 1, dtype=np.complex128)
        base[0], base[-1] = -c, 1.0
        return Polynomial(npoly.polypow(base, m))

    @staticmethod
    def multiple_critical(h: int, r: complex, c: complex) -> Polynomial:
        """Primitive de z^h (z − r) plus c : point critique d'ordre h en 0"""
        derivative = np.concatenate([np.zeros(h, dtype=np.complex128), [-r, 1.0]])
        return Polynomial(npoly.polyint(derivative, k=[c]))

    # ===== CORPUS =====

    def generate_corpus(
        self, count: int = DEFAULT_RANDOM_COUNT, min_degree: int = 3, max_degree: int = 12
    ) -> List[Polynomial]:
        """count polynômes unitaires aléatoires, degrés uniformes dans [min_degree, max_degree]"""
        degrees = self.rng.integers(min_degree, max_degree + 1, count)
        corpus = [self.random_monic(int(d)) for d in degrees]
        logger.info("Corpus de %d polynômes généré (graine %d)", count, self.seed)
        return corpus


def corpus_summary(corpus: List[Polynomial]) -> pd.DataFrame:
    """Résumé tabulaire : degré, module max des coefficients, rayon de Cauchy"""
    return pd.DataFrame({
        "degree": [p.degree for p in corpus],
        "max_coeff_modulus": [float(np.max(np.abs(p.coeffs[:-1]))) for p in corpus],
        "cauchy_radius": [cauchy_radius(p) for p in corpus],
    })
