"""
🎯 Bornes supérieures RootBounds
Rayons d'inclusion certifiés : au moins un zéro de p dans le disque fermé autour de ζ
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple

from exceptions import BoundUndefinedError, ConditionError
from radius_profile import RadiusProfile, coefficient_vanishes

logger = logging.getLogger(__name__)


def _log_binomial(n: int, k: int) -> float:
    return math.log(math.comb(n, k))


@dataclass(frozen=True)
class GammaSequence:
    """Suite majorante γ_k (k = 2..k_max) et sa normalisation δ_k"""

    n: int
    gamma: Tuple[float, ...]   # gamma[k - 2] = γ_k
    delta: Tuple[float, ...]   # delta[k - 2] = δ_k = γ_k / n^⌊k/2⌋

    @property
    def k_max(self) -> int:
        return len(self.gamma) + 1

    def gamma_k(self, k: int) -> float:
        return self.gamma[k - 2]

    def delta_k(self, k: int) -> float:
        return self.delta[k - 2]

    def bound(self, profile: RadiusProfile, k: int) -> float:
        """Δ ≤ ρ^(k) (γ_k / k)^(1/k)"""
        return profile.radius(k) * (self.gamma_k(k) / k) ** (1.0 / k)

    def delta_envelope(self, k: int) -> float:
        """Π_{j=2}^{⌊k/2⌋} (1/n + 1/(2j−1) + 1/(2j−2)), majorant de δ_k"""
        return math.prod(
            1.0 / self.n + 1.0 / (2 * j - 1) + 1.0 / (2 * j - 2)
            for j in range(2, k // 2 + 1)
        )


@dataclass(frozen=True)
class CriticalInclusion:
    """Bornes d'inclusion en un point critique"""

    per_k: Dict[int, float]
    blanket: float
    best: float


def gamma_sequence(n: int, k_max: int) -> GammaSequence:
    """γ_2 = γ_3 = n, γ_k = γ_{k−1} + n/(k−2) γ_{k−2}"""
    if not 2 <= k_max <= n:
        raise ValueError(f"k_max = {k_max} outside 2..{n}")

    gamma = [float(n), float(n)]
    for k in range(4, k_max + 1):
        gamma.append(gamma[-1] + n / (k - 2) * gamma[-2])
    gamma = gamma[: k_max - 1]

    delta = tuple(g / float(n) ** (k // 2) for k, g in enumerate(gamma, start=2))
    return GammaSequence(n=n, gamma=tuple(gamma), delta=delta)


def inclusion_radius_general(profile: RadiusProfile, k: int) -> float:
    """ρ^(k) C(n, k)^(1/k), valable pour tout centre"""
    n = profile.n
    if not 1 <= k <= n:
        raise BoundUndefinedError(f"k = {k} outside 1..{n}")
    rho = profile.radius(k)
    if math.isinf(rho):
        raise BoundUndefinedError("bound undefined for this k")
    return rho * math.exp(_log_binomial(n, k) / k)


def general_bounds(profile: RadiusProfile) -> Dict[int, float]:
    """Toutes les bornes générales finies, indexées par k"""
    return {
        k: inclusion_radius_general(profile, k)
        for k in range(1, profile.n + 1)
        if math.isfinite(profile.radius(k))
    }


def _require_critical(profile: RadiusProfile):
    if not profile.is_critical:
        raise ConditionError("critical-point bound requires p'(center) = 0")


def inclusion_radius_critical(profile: RadiusProfile) -> CriticalInclusion:
    """Bornes par k en un point critique, plus la borne globale ρ √(n/2)"""
    _require_critical(profile)
    n = profile.n
    per_k: Dict[int, float] = {}

    for k in range(2, n + 1):
        rho = profile.radius(k)
        if math.isinf(rho):
            continue
        if k == 2:
            value = rho * math.sqrt(n / 2.0)
        elif k == 3:
            value = rho * (n / 3.0) ** (1.0 / 3.0)
        elif rho == 0.0:
            value = 0.0
        else:
            # Produit en espace logarithmique (facteurs < 1)
            log_product = sum(
                math.log(1.0 / n + 1.0 / (2 * i - 1) + 1.0 / (2 * i - 2))
                for i in range(2, k // 2 + 1)
            )
            value = math.exp(
                math.log(rho) + 0.5 * math.log(n) + (log_product - math.log(k)) / k
            )
        per_k[k] = value

    blanket = profile.rho_min_from2 * math.sqrt(n / 2.0)
    best = min([blanket, *per_k.values()])
    return CriticalInclusion(per_k=per_k, blanket=blanket, best=best)


def inclusion_radius_multiplicity(profile: RadiusProfile, h: int) -> Dict[int, float]:
    """ρ^(h+i) (n/(h+1))^(1/(h+i)), i = 1..h+1, si b_1 = … = b_h = 0"""
    if h < 1:
        raise ConditionError(f"multiplicity h = {h} must be >= 1")
    for j in range(1, min(h, profile.n) + 1):
        if not coefficient_vanishes(profile.expansion, j):
            raise ConditionError(f"derivative condition fails: b_{j} != 0")

    n = profile.n
    bounds: Dict[int, float] = {}
    for i in range(1, h + 2):
        k = h + i
        if k > n:
            break
        rho = profile.radius(k)
        if math.isinf(rho):
            continue
        bounds[k] = rho * (n / (h + 1.0)) ** (1.0 / k)
    return bounds


def henrici_chain(profile: RadiusProfile) -> Tuple[float, float, float]:
    """min_k C(n,k)^(1/k) ρ^(k) ≤ max_k C(n,k)^(1/k) ρ ≤ n ρ, avec ρ = min_{k≥1} ρ^(k)"""
    n = profile.n
    rho = profile.rho_min_full
    lhs = min(general_bounds(profile).values())
    middle = max(math.exp(_log_binomial(n, k) / k) for k in range(1, n + 1)) * rho
    return lhs, middle, n * rho
