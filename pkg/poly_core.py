"""
🧮 Noyau polynomial RootBounds
Représentation dense complexe, Horner, dérivée, décalage de Taylor,
sommes de Newton et solveur scalaire monotone
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from config import SOLVER_BRACKET_RTOL, SOLVER_FTOL, SOLVER_MAX_ITER
from exceptions import BracketError, DegenerateCenterError, PolynomialError

logger = logging.getLogger(__name__)


class Polynomial:
    """Polynôme dense à coefficients complexes, ordre croissant des degrés"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128)).ravel()
        nonzero = np.flatnonzero(arr)
        if nonzero.size == 0:
            raise PolynomialError("zero polynomial")

        # Coefficients de tête nuls supprimés
        arr = arr[: nonzero[-1] + 1].copy()
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> complex:
        return complex(self._coeffs[-1])

    def __call__(self, z):
        return evaluate(self, z)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash(self._coeffs.tobytes())

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self._coeffs)
        return f"Polynomial([{terms}])"


@dataclass(frozen=True)
class ShiftedExpansion:
    """Coefficients b_k = p^(k)(ζ)/k! de p autour du centre ζ"""

    center: complex
    b: Tuple[complex, ...]
    # Majorant Σ_i C(i,k) |a_i| R^(i−k), R = max(1, |ζ|) : échelle d'erreur de b_k
    scale: Tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.b) - 1

    def evaluate(self, z: complex) -> complex:
        """Σ b_k (z − ζ)^k par Horner"""
        w = complex(z) - self.center
        acc = 0j
        for coefficient in reversed(self.b):
            acc = acc * w + coefficient
        return acc

    def as_polynomial(self) -> Polynomial:
        """Polynôme q(w) = p(w + ζ)"""
        return Polynomial(self.b)


def evaluate(p: Polynomial, z: complex) -> complex:
    """Évaluation de Horner"""
    z = complex(z)
    acc = 0j
    for coefficient in reversed(p.coeffs.tolist()):
        acc = acc * z + coefficient
    return acc


def derivative(p: Polynomial) -> Polynomial:
    """Dérivée formelle : coefficient i = (i+1)·a_{i+1}"""
    if p.degree < 1:
        raise PolynomialError("constant polynomial")
    return Polynomial(p.coeffs[1:] * np.arange(1, p.degree + 1))


def taylor_shift(p: Polynomial, center: complex) -> ShiftedExpansion:
    """Recentrage de p en ζ par n divisions synthétiques successives"""
    center = complex(center)
    b = p.coeffs.tolist()
    scale = np.abs(p.coeffs).tolist()
    n = len(b) - 1
    reach = max(1.0, abs(center))

    for k in range(n):
        for j in range(n - 1, k - 1, -1):
            if center != 0:
                b[j] += center * b[j + 1]
            scale[j] += reach * scale[j + 1]

    return ShiftedExpansion(
        center=center,
        b=tuple(complex(c) for c in b),
        scale=tuple(float(s) for s in scale),
    )


def newton_power_sums(e: ShiftedExpansion, m: int) -> List[complex]:
    """s_k = Σ (ξ_i − ζ)^(−k), k = 1..m, par les identités de Newton"""
    if m > e.degree:
        raise PolynomialError(f"m = {m} exceeds degree {e.degree}")
    if e.b[0] == 0:
        raise DegenerateCenterError("center is a root; reciprocal power sums undefined")

    # Normalisation b_0 = 1 : k a_k = −s_k − Σ_{i<k} a_i s_{k−i}
    a = [c / e.b[0] for c in e.b]
    sums: List[complex] = []
    for k in range(1, m + 1):
        s_k = -k * a[k]
        for i in range(1, k):
            s_k -= a[i] * sums[k - i - 1]
        sums.append(s_k)
    return sums


def solve_monotone(
    f: Callable[[float], float],
    df: Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float = SOLVER_FTOL,
    bracket_rtol: float = SOLVER_BRACKET_RTOL,
    max_iter: int = SOLVER_MAX_ITER,
) -> float:
    """Racine de f sur [lo, hi] : bissection puis Newton gardé dans l'intervalle"""
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(f"no sign change on [{lo}, {hi}]")

    width = hi - lo
    while hi - lo > bracket_rtol * width:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid

    t = 0.5 * (lo + hi)
    for iteration in range(max_iter):
        f_t = f(t)
        if abs(f_t) <= ftol:
            logger.debug("solve_monotone: %d pas de Newton", iteration)
            return t
        if np.sign(f_t) == np.sign(f_lo):
            lo, f_lo = t, f_t
        else:
            hi = t

        slope = df(t)
        step = t - f_t / slope if slope != 0 else math.nan
        if not lo < step < hi:
            step = 0.5 * (lo + hi)
        if abs(step - t) <= 4 * np.finfo(float).eps * max(1.0, abs(t)):
            return step
        t = step

    return t


def coefficients_from_pairs(pairs: Sequence[Sequence[float]]) -> Polynomial:
    """Construit un polynôme à partir de paires (re, im)"""
    return Polynomial([complex(re, im) for re, im in pairs])
