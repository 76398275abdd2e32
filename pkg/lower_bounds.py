"""
🛡️ Bornes inférieures RootBounds
Rayons d'exclusion certifiés : aucun zéro de p dans le disque ouvert autour de ζ
"""

import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from exceptions import BracketError, DegenerateCenterError, ConditionError
from poly_core import Polynomial, ShiftedExpansion, solve_monotone, taylor_shift
from radius_profile import RadiusProfile, coefficient_vanishes

logger = logging.getLogger(__name__)

GOLDEN_GAMMA = (math.sqrt(5.0) - 1.0) / 2.0
_LOG_MAX = 700.0


# ===== MODÈLES =====

class OmegaCondition(BaseModel):
    """Condition θ^i |b_i / b_0| ≤ ε pour i ∈ Ω"""
    model_config = ConfigDict(frozen=True)

    omega: Tuple[int, ...] = Field(..., min_length=1, description="Indices de Ω, strictement croissants")
    epsilon: float = Field(0.0, ge=0.0, description="Tolérance ε (ε·h < 1)")
    degree: Optional[int] = Field(None, ge=2, description="Degré n du polynôme vérifié")
    theta: Optional[float] = Field(None, gt=0.0, description="Majorant de max_i |ζ − ξ_i|")

    @field_validator("omega")
    @classmethod
    def _strictly_increasing(cls, value):
        if value[0] < 1 or any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("omega must be strictly increasing positive integers")
        return value

    @model_validator(mode="after")
    def _regime(self):
        if self.epsilon * self.h >= 1.0:
            raise ValueError(f"epsilon * h = {self.epsilon * self.h} must be < 1")
        if self.degree is not None and (self.omega[-1] > self.degree - 1 or self.h >= self.degree):
            raise ValueError(f"omega must lie in 1..{self.degree - 1}")
        return self

    @property
    def h(self) -> int:
        return len(self.omega)

    @property
    def verified(self) -> bool:
        return self.degree is not None and self.theta is not None


@dataclass(frozen=True)
class OmegaFailure:
    """Échec de la condition : premier indice violé"""
    index: int
    value: float
    epsilon: float


# ===== UTILITAIRES =====

def _exp(log_value: float) -> float:
    return math.inf if log_value > _LOG_MAX else math.exp(log_value)


def theta_bound(e: ShiftedExpansion) -> float:
    """Borne de Cauchy du développement décalé : 1 + max_{k<n} |b_k / b_n|"""
    leading = abs(e.b[-1])
    return 1.0 + max(abs(c) / leading for c in e.b[:-1])


def measured_epsilon(e: ShiftedExpansion, omega: Iterable[int], theta: float) -> float:
    """Plus petit ε satisfaisant la condition : max_{i∈Ω} θ^i |b_i / b_0|"""
    log_b0 = math.log(abs(e.b[0]))
    log_theta = math.log(theta)
    values = [
        _exp(i * log_theta + math.log(abs(e.b[i])) - log_b0) if e.b[i] != 0 else 0.0
        for i in omega
    ]
    return max(values)


def check_omega_condition(
    e: ShiftedExpansion, omega: Iterable[int], epsilon: float
) -> Union[OmegaCondition, OmegaFailure]:
    """Vérifie la condition sur un développement déjà calculé"""
    if coefficient_vanishes(e, 0):
        raise DegenerateCenterError("center is a root")

    omega = tuple(omega)
    theta = theta_bound(e)
    log_b0 = math.log(abs(e.b[0]))
    for i in omega:
        if not 1 <= i < e.degree:
            raise ConditionError(f"omega index {i} outside 1..{e.degree - 1}")
        if e.b[i] == 0:
            continue
        value = _exp(i * math.log(theta) + math.log(abs(e.b[i])) - log_b0)
        if value > epsilon:
            logger.debug("Condition Ω violée en i=%d (%.3e > %.3e)", i, value, epsilon)
            return OmegaFailure(index=i, value=value, epsilon=epsilon)

    return OmegaCondition(omega=omega, epsilon=epsilon, degree=e.degree, theta=theta)


# ===== BORNES =====

def exclusion_radius_basic(profile: RadiusProfile) -> float:
    """γ ρ avec γ = 1/2 ; ρ = min_{k≥1} ρ^(k) pour un centre quelconque"""
    if profile.degenerate:
        raise DegenerateCenterError("center is a root")
    return 0.5 * profile.rho_min_full


def gamma_for(omega: Iterable[int], epsilon: float = 0.0) -> float:
    """Unique racine dans (1/2, 1) de (t−1) Σ_{i∈Ω} t^i + 2t − 1 + (1−t) h ε"""
    omega = np.asarray(tuple(omega), dtype=float)
    h = len(omega)
    if h == 0:
        raise ConditionError("omega must contain at least one index")

    def f(t):
        return (t - 1.0) * np.sum(t ** omega) + 2.0 * t - 1.0 + (1.0 - t) * h * epsilon

    def df(t):
        return np.sum(t ** omega) + (t - 1.0) * np.sum(omega * t ** (omega - 1.0)) + 2.0 - h * epsilon

    try:
        return float(solve_monotone(f, df, 0.5, 1.0))
    except BracketError as exc:
        raise BracketError("condition violates ε < 1/h regime") from exc


def gamma_omega(cond: OmegaCondition) -> float:
    """γ associé à la condition Ω"""
    return gamma_for(cond.omega, cond.epsilon)


def gamma_first_order(epsilon: float) -> float:
    """Développement au premier ordre de γ(Ω={1}, ε) en ε = 0"""
    return GOLDEN_GAMMA - epsilon * (3.0 / math.sqrt(5.0) - 1.0) / 2.0


def verify_omega_condition(
    p: Polynomial, center: complex, omega: Iterable[int], epsilon: float
) -> Union[OmegaCondition, OmegaFailure]:
    """Calcule θ au centre et vérifie θ^i |b_i / b_0| ≤ ε pour i ∈ Ω"""
    return check_omega_condition(taylor_shift(p, center), omega, epsilon)


def exclusion_radius_omega(profile: RadiusProfile, cond: OmegaCondition) -> float:
    """γ(Ω, ε) ρ, valide si la condition a été vérifiée en ce centre"""
    if profile.degenerate:
        raise DegenerateCenterError("center is a root")
    if not cond.verified or cond.degree != profile.n:
        raise ConditionError("omega condition not verified for this polynomial")

    recheck = check_omega_condition(profile.expansion, cond.omega, cond.epsilon)
    if isinstance(recheck, OmegaFailure):
        raise ConditionError(
            f"omega condition fails at index {recheck.index} for center {profile.center}"
        )
    return gamma_omega(cond) * profile.rho_min_full


def sigma_radius(e: ShiftedExpansion) -> float:
    """Unique racine positive de Σ_{i≥1} |b_i| t^i = |b_0|"""
    if e.b[0] == 0:
        raise DegenerateCenterError("center is a root")

    log_b0 = math.log(abs(e.b[0]))
    logs = np.array([math.log(abs(c)) if c != 0 else -np.inf for c in e.b])
    k = np.arange(len(logs))

    # σ ≤ min_k |b_0 / b_k|^(1/k) : on travaille en s = t / hi ∈ [0, 1]
    with np.errstate(divide="ignore", invalid="ignore"):
        log_rho = np.where(np.isfinite(logs[1:]), (log_b0 - logs[1:]) / k[1:], np.inf)
    log_hi = float(np.min(log_rho))
    scaled = np.zeros(len(logs))
    finite = np.isfinite(logs)
    scaled[finite] = np.exp(logs[finite] - log_b0 + k[finite] * log_hi)
    scaled[0] = -1.0
    slope = scaled[1:] * k[1:]

    def f(s):
        return float(np.polynomial.polynomial.polyval(s, scaled))

    def df(s):
        return float(np.polynomial.polynomial.polyval(s, slope))

    return math.exp(log_hi) * solve_monotone(f, df, 0.0, 1.0)
