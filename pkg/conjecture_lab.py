"""
🧪 Laboratoire de la conjecture RootBounds
Anneaux centrés aux points critiques, couverture des racines,
famille de contre-exemples et croissance du rapport distance / rayon
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from config import CLUSTER_RTOL, MEMBERSHIP_RTOL, N_JOBS
from exceptions import OracleConvergenceError, PolynomialError
from poly_core import Polynomial
from radius_profile import rho_family_counterexample, rho_profile
from root_oracle import RootSet, critical_points, find_roots, sort_by_angle

logger = logging.getLogger(__name__)


# ===== MODÈLES =====

@dataclass(frozen=True)
class Annulus:
    """Anneau fermé inner ≤ |z − center| ≤ outer ; rho = 0 pour un centre racine de p"""

    center: complex
    inner: float
    outer: float
    rho: float

    def __post_init__(self):
        if not 0.0 <= self.inner <= self.outer:
            raise ValueError(f"invalid annulus radii [{self.inner}, {self.outer}]")

    @property
    def is_point(self) -> bool:
        return self.outer == 0.0

    def contains(self, z: complex) -> bool:
        d = abs(complex(z) - self.center)
        if self.is_point:
            return d <= CLUSTER_RTOL * (1.0 + abs(self.center))
        return self.inner * (1.0 - MEMBERSHIP_RTOL) <= d <= self.outer * (1.0 + MEMBERSHIP_RTOL)

    def ratio(self, z: complex) -> float:
        """|z − center| / ρ"""
        d = abs(complex(z) - self.center)
        if self.rho == 0.0:
            return 0.0 if d <= CLUSTER_RTOL * (1.0 + abs(self.center)) else math.inf
        return d / self.rho


@dataclass(frozen=True)
class ConjectureReport:
    iota1: float
    iota2: float
    annuli: List[Annulus]
    covered: bool
    uncovered_roots: List[complex]
    per_root_ratios: List[float]


@dataclass(frozen=True)
class CounterexampleRecord:
    """z^(n+1) − (n+1)z : rayons en forme close et rapports mesurés pour la racine 0"""

    n: int
    polynomial: Polynomial
    rho2_closed_form: float
    ratio_closed_form: Dict[int, float]
    measured_ratio: Dict[int, float] = field(default_factory=dict)
    # Facteur (n+1)^(1/(n+1)) de la littérature, absent de la mesure directe
    literature_factor: float = 1.0

    @property
    def growth_bound_holds(self) -> bool:
        bound_ok = all(
            self.measured_ratio[k] >= self.ratio_closed_form[k] * (1.0 - 1e-9)
            for k in self.measured_ratio
        )
        two_ok = 2 not in self.measured_ratio or (
            self.measured_ratio[2] >= math.sqrt((self.n + 1) / 2.0) * (1.0 - 1e-9)
        )
        return bound_ok and two_ok


# ===== ANNEAUX ET COUVERTURE =====

def _validate_iotas(iota1: float, iota2: float):
    if not 0.0 < iota1 <= iota2:
        raise ValueError(f"need 0 < iota1 <= iota2, got iota1={iota1}, iota2={iota2}")


def build_annuli(
    p: Polynomial,
    iota1: float,
    iota2: float,
    centers: Optional[Sequence[complex]] = None,
    n_jobs: int = N_JOBS,
) -> List[Annulus]:
    """Un anneau [ι₁ρ_j, ι₂ρ_j] par point critique, ρ_j = min_{k≥2} ρ^(k)(ζ_j)"""
    _validate_iotas(iota1, iota2)
    if p.degree < 2:
        raise PolynomialError(f"degree {p.degree} < 2: no critical points")
    if centers is None:
        centers = [cp.location for cp in critical_points(p)]

    profiles = Parallel(n_jobs=n_jobs)(delayed(rho_profile)(p, c) for c in sort_by_angle(list(centers)))

    annuli = []
    for profile in profiles:
        if profile.degenerate:
            annuli.append(Annulus(center=profile.center, inner=0.0, outer=0.0, rho=0.0))
            continue
        rho = profile.rho_min_from2
        annuli.append(Annulus(center=profile.center, inner=iota1 * rho, outer=iota2 * rho, rho=rho))

    logger.debug("%d anneaux construits (ι₁=%s, ι₂=%s)", len(annuli), iota1, iota2)
    return annuli


def check_coverage(
    p: Polynomial,
    iota1: float,
    iota2: float,
    roots: Optional[RootSet] = None,
    centers: Optional[Sequence[complex]] = None,
    n_jobs: int = N_JOBS,
) -> ConjectureReport:
    """Chaque racine de p appartient-elle à la réunion des anneaux ?"""
    annuli = build_annuli(p, iota1, iota2, centers=centers, n_jobs=n_jobs)
    if roots is None:
        roots = find_roots(p)
    if not roots.converged:
        raise OracleConvergenceError(f"roots did not converge (max residual {max(roots.residuals):.3e})")

    uncovered, ratios = [], []
    for xi in roots.roots:
        ratios.append(min(a.ratio(xi) for a in annuli))
        if not any(a.contains(xi) for a in annuli):
            uncovered.append(xi)

    covered = not uncovered
    if not covered:
        logger.info("Couverture en défaut: %d racine(s) hors des anneaux", len(uncovered))

    return ConjectureReport(
        iota1=iota1,
        iota2=iota2,
        annuli=annuli,
        covered=covered,
        uncovered_roots=uncovered,
        per_root_ratios=ratios,
    )


# ===== FAMILLE DE CONTRE-EXEMPLES =====

def counterexample_polynomial(n: int) -> Polynomial:
    """z^(n+1) − (n+1) z"""
    coeffs = np.zeros(n + 2, dtype=np.complex128)
    coeffs[1] = -(n + 1)
    coeffs[-1] = 1.0
    return Polynomial(coeffs)


def _origin_ratios(p: Polynomial, centers: Iterable[complex], ks: Sequence[int]) -> Dict[int, float]:
    """min_ζ |0 − ζ| / ρ^(k)(ζ) pour chaque k, centres dégénérés exclus"""
    if p.coeffs[0] != 0:
        raise PolynomialError("origin is not a root")
    measured = {k: math.inf for k in ks}
    for center in centers:
        profile = rho_profile(p, center)
        if profile.degenerate:
            logger.debug("Centre %s ignoré : racine de p", center)
            continue
        for k in ks:
            measured[k] = min(measured[k], abs(center) / profile.radius(k))
    return measured


def counterexample_family(n: int, ks: Optional[Iterable[int]] = None) -> CounterexampleRecord:
    """Famille z^(n+1) − (n+1)z mesurée en tous ses points critiques"""
    if n < 2:
        raise ValueError(f"n = {n} < 2")
    p = counterexample_polynomial(n)
    ks = sorted(set(ks)) if ks is not None else list(range(2, n + 2))

    closed = {k: 1.0 / rho_family_counterexample(n, k) for k in ks}
    centers = [cp.location for cp in critical_points(p)]
    measured = _origin_ratios(p, centers, ks)

    record = CounterexampleRecord(
        n=n,
        polynomial=p,
        rho2_closed_form=math.sqrt(2.0 / (n + 1)),
        ratio_closed_form=closed,
        measured_ratio=measured,
        literature_factor=(n + 1) ** (1.0 / (n + 1)),
    )
    if not record.growth_bound_holds:
        logger.warning("Inégalité de croissance violée pour n=%d", n)
    return record


def measure_origin_ratio(n: int, k: int, all_centers: bool = False) -> float:
    """|0 − ζ| / ρ^(k)(ζ) au point critique ζ = 1, ou minimum sur tous les points critiques"""
    if k < 2 or n < k - 1:
        raise ValueError(f"need k >= 2 and n >= k - 1, got n={n}, k={k}")
    p = counterexample_polynomial(n)
    centers = [cp.location for cp in critical_points(p)] if all_centers else [1.0 + 0j]
    return _origin_ratios(p, centers, [k])[k]


def loglog_slope(table: pd.DataFrame, column: str = "measured_ratio") -> float:
    """Pente de la régression de log(column) sur log(n)"""
    if len(table) < 2:
        raise ValueError("need at least two sweep points")
    slope, _ = np.polyfit(np.log(table["n"].to_numpy(float)), np.log(table[column].to_numpy(float)), 1)
    return float(slope)


def growth_sweep(n_list: Sequence[int], k: int, n_jobs: int = N_JOBS) -> pd.DataFrame:
    """Table (n, measured_ratio, lower_bound) ; la pente log-log est dans table.attrs["slope"]"""
    if k < 2:
        raise ValueError(f"k = {k} < 2")
    bad = [n for n in n_list if n < max(2, k - 1)]
    if bad:
        raise ValueError(f"n values {bad} below k - 1 = {k - 1}")

    measured = Parallel(n_jobs=n_jobs)(delayed(measure_origin_ratio)(n, k) for n in n_list)
    table = pd.DataFrame({
        "n": list(n_list),
        "measured_ratio": measured,
        "lower_bound": [1.0 / rho_family_counterexample(n, k) for n in n_list],
    })
    if len(table) >= 2:
        table.attrs["slope"] = loglog_slope(table)
        table.attrs["expected_slope"] = 1.0 - 1.0 / k
    logger.info("Balayage k=%d sur n=%s", k, list(n_list))
    return table
