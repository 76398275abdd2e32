"""
📏 Profil de rayons RootBounds
ρ^(k)(ζ) = |k! p(ζ) / p^(k)(ζ)|^(1/k) et ses minima
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from config import CRITICAL_RTOL, ZERO_RTOL
from exceptions import PolynomialError
from poly_core import Polynomial, ShiftedExpansion, taylor_shift

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadiusProfile:
    """Famille ρ^(k), k = 1..n, autour d'un centre"""

    center: complex
    n: int
    rho_k: Tuple[float, ...]      # rho_k[k - 1] = ρ^(k), math.inf si p^(k)(ζ) = 0
    rho_min_from2: float
    rho_min_full: float
    argmin_from2: int
    argmin_full: int
    degenerate: bool
    expansion: ShiftedExpansion

    def radius(self, k: int) -> float:
        """ρ^(k) avec k compté à partir de 1"""
        if not 1 <= k <= self.n:
            raise IndexError(f"k = {k} outside 1..{self.n}")
        return self.rho_k[k - 1]

    @property
    def is_critical(self) -> bool:
        return coefficient_vanishes(self.expansion, 1)


def log_scale(e: ShiftedExpansion, k: int) -> float:
    """log Σ_i C(i,k) |a_i| R^(i−k), borne de l'erreur d'arrondi et de position sur b_k"""
    return math.log(e.scale[k]) if e.scale[k] > 0 else -math.inf


def coefficient_vanishes(e: ShiftedExpansion, k: int, rtol: Optional[float] = None) -> bool:
    """b_k nul à la tolérance relative près (ZERO_RTOL pour b_0, CRITICAL_RTOL sinon)"""
    if rtol is None:
        rtol = ZERO_RTOL if k == 0 else CRITICAL_RTOL
    value = e.b[k]
    if value == 0:
        return True
    return math.log(abs(value)) <= math.log(rtol) + log_scale(e, k)


def profile_from_expansion(e: ShiftedExpansion) -> RadiusProfile:
    """Profil calculé sur un développement déjà disponible"""
    n = e.degree
    if n < 2:
        raise PolynomialError(f"degree {n} < 2: radius profile needs degree >= 2")

    degenerate = coefficient_vanishes(e, 0, ZERO_RTOL)
    if degenerate:
        logger.info("Profil dégénéré en %s (p(ζ) ≈ 0)", e.center)
        rho = tuple(0.0 for _ in range(n))
    else:
        # Espace logarithmique : |b_k| peut dépasser 1e300 pour n ~ 1000
        log_b0 = math.log(abs(e.b[0]))
        rho = tuple(
            math.exp((log_b0 - math.log(abs(e.b[k]))) / k) if e.b[k] != 0 else math.inf
            for k in range(1, n + 1)
        )

    argmin_from2 = min(range(2, n + 1), key=lambda k: (rho[k - 1], k))
    argmin_full = min(range(1, n + 1), key=lambda k: (rho[k - 1], k))

    return RadiusProfile(
        center=e.center,
        n=n,
        rho_k=rho,
        rho_min_from2=rho[argmin_from2 - 1],
        rho_min_full=rho[argmin_full - 1],
        argmin_from2=argmin_from2,
        argmin_full=argmin_full,
        degenerate=degenerate,
        expansion=e,
    )


def rho_profile(p: Polynomial, center: complex) -> RadiusProfile:
    """Profil de rayons de p autour de center"""
    if p.degree < 2:
        raise PolynomialError(f"degree {p.degree} < 2: radius profile needs degree >= 2")
    return profile_from_expansion(taylor_shift(p, center))


def rho_family_counterexample(n: int, k: int) -> float:
    """Forme close ρ^(n,k) = (n / C(n+1, k))^(1/k) pour z^(n+1) − (n+1)z en une racine n-ième de l'unité"""
    if n < 1 or not 2 <= k <= n + 1:
        raise ValueError(f"k = {k} outside 2..{n + 1}")
    return math.exp((math.log(n) - math.log(math.comb(n + 1, k))) / k)
