"""
🔍 Oracle de racines RootBounds
Itération simultanée d'Ehrlich–Aberth, regroupement des racines multiples
et distances de référence pour vérifier chaque borne
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from config import (
    CLUSTER_CAP_RTOL,
    CLUSTER_RTOL,
    ORACLE_ANGLE_OFFSET,
    ORACLE_LOCK_RTOL,
    ORACLE_MAX_ITER,
    ORACLE_RESIDUAL_TOL,
    POLISH_STEPS,
)
from exceptions import OracleConvergenceError, PolynomialError
from poly_core import Polynomial, derivative, solve_monotone

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSet:
    """Racines (avec multiplicité), résidus relatifs et verdict de convergence"""

    roots: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    converged: bool
    iterations: int = 0
    clusters: Tuple[Tuple[complex, int], ...] = field(default=())

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class CriticalPoint:
    location: complex
    multiplicity: int


def cauchy_radius(p: Polynomial) -> float:
    """Racine positive de |a_n| t^n − Σ_{k<n} |a_k| t^k"""
    moduli = np.abs(p.coeffs) / abs(p.leading)
    if not np.any(moduli[:-1]):
        return 0.0
    # Racines nulles exactes retirées : f(0) < 0
    moduli = moduli[np.flatnonzero(moduli)[0]:]

    # Encadrement : borne de Cauchy classique 1 + max |a_k / a_n|
    hi = 1.0 + float(np.max(moduli[:-1]))
    signed = -moduli.copy()
    signed[-1] = 1.0
    slope = npoly.polyder(signed)

    def f(t):
        return float(npoly.polyval(t, signed))

    def df(t):
        return float(npoly.polyval(t, slope))

    return solve_monotone(f, df, 0.0, hi, ftol=0.0)


def scaled_residuals(p: Polynomial, z) -> np.ndarray:
    """|p(z)| / Σ |a_i| |z|^i (erreur inverse de Horner)"""
    z = np.asarray(z, dtype=np.complex128)
    values = np.abs(npoly.polyval(z, p.coeffs))
    scale = npoly.polyval(np.abs(z), np.abs(p.coeffs))
    with np.errstate(divide="ignore", invalid="ignore"):
        return np.where(scale > 0, values / scale, values)


def _aberth(coeffs: np.ndarray, max_iter: int) -> Tuple[np.ndarray, int]:
    """Itération d'Ehrlich–Aberth (coefficient constant non nul)"""
    m = len(coeffs) - 1
    slope = npoly.polyder(coeffs)
    radius = cauchy_radius(Polynomial(coeffs))
    angles = 2.0 * np.pi * np.arange(m) / m + ORACLE_ANGLE_OFFSET
    z = radius * np.exp(1j * angles)

    active = np.ones(m, dtype=bool)
    iteration = 0
    for iteration in range(1, max_iter + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        zi = z[idx]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = npoly.polyval(zi, coeffs) / npoly.polyval(zi, slope)
            diff = zi[:, None] - z[None, :]
            diff[np.arange(idx.size), idx] = np.inf
            repulsion = np.sum(1.0 / diff, axis=1)
            correction = ratio / (1.0 - ratio * repulsion)

        stuck = ~np.isfinite(correction)
        if np.any(stuck):
            # p'(z) = 0 ou collision : petite perturbation déterministe
            correction[stuck] = -1e-8 * (1.0 + np.abs(zi[stuck])) * np.exp(1j * (idx[stuck] + 1.0))

        z[idx] = zi - correction
        locked = np.abs(correction) <= ORACLE_LOCK_RTOL * (1.0 + np.abs(z[idx]))
        active[idx[locked]] = False

    return z, iteration


def _inclusion_radii(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Rayons n |W_i| des disques de Weierstrass, en espace logarithmique"""
    m = len(z)
    values = np.abs(npoly.polyval(z, coeffs))
    distances = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(distances, 1.0)
    with np.errstate(divide="ignore"):
        log_w = np.log(values) - math.log(abs(coeffs[-1])) - np.sum(np.log(distances), axis=1)
    return m * np.exp(np.minimum(log_w, 700.0))


def _cluster_labels(z: np.ndarray, radii: np.ndarray) -> np.ndarray:
    """Composantes connexes des disques qui se chevauchent"""
    scale = 1.0 + np.abs(z)
    tol = np.maximum(CLUSTER_RTOL * scale, np.minimum(radii, CLUSTER_CAP_RTOL * scale))
    adjacency = np.abs(z[:, None] - z[None, :]) <= tol[:, None] + tol[None, :]

    labels = np.full(len(z), -1)
    current = 0
    for start in range(len(z)):
        if labels[start] >= 0:
            continue
        frontier = [start]
        labels[start] = current
        while frontier:
            node = frontier.pop()
            for neighbour in np.flatnonzero(adjacency[node] & (labels < 0)):
                labels[neighbour] = current
                frontier.append(neighbour)
        current += 1
    return labels


def _polish(p: Polynomial, start: complex, multiplicity: int) -> complex:
    """Newton sur p^(m−1), dont une racine multiple de p est racine simple"""
    target = p.coeffs
    for _ in range(multiplicity - 1):
        target = npoly.polyder(target)
    slope = npoly.polyder(target)

    z = complex(start)
    best, best_residual = z, float(scaled_residuals(p, z))
    for _ in range(POLISH_STEPS):
        d = npoly.polyval(z, slope)
        if d == 0:
            break
        z = z - npoly.polyval(z, target) / d
        residual = float(scaled_residuals(p, z))
        if residual <= best_residual:
            best, best_residual = z, residual
    return best


def find_roots(p: Polynomial, max_iter: int = ORACLE_MAX_ITER) -> RootSet:
    """Toutes les racines de p, initialisées sur le cercle de Cauchy"""
    if p.degree < 1:
        raise PolynomialError("constant polynomial has no roots")

    coeffs = p.coeffs
    zeros = int(np.flatnonzero(coeffs)[0])
    reduced = coeffs[zeros:]
    m = len(reduced) - 1

    iterations = 0
    if m == 0:
        approx = np.empty(0, dtype=np.complex128)
    elif m == 1:
        approx = np.array([-reduced[0] / reduced[1]])
    else:
        approx, iterations = _aberth(reduced, max_iter)

    clusters: List[Tuple[complex, int]] = []
    if zeros:
        clusters.append((0j, zeros))
    if m:
        reduced_poly = Polynomial(reduced)
        labels = _cluster_labels(approx, _inclusion_radii(reduced, approx))
        for label in range(labels.max() + 1):
            members = approx[labels == label]
            location = _polish(reduced_poly, complex(np.mean(members)), len(members))
            clusters.append((location, len(members)))

    roots = tuple(loc for loc, mult in clusters for _ in range(mult))
    residuals = tuple(float(r) for r in scaled_residuals(p, np.array(roots, dtype=np.complex128)))
    converged = bool(np.all(np.asarray(residuals) <= ORACLE_RESIDUAL_TOL))

    if converged:
        logger.debug("Oracle: degré %d, %d itérations, %d grappes", p.degree, iterations, len(clusters))
    else:
        logger.warning(
            "Oracle non convergé: degré %d, résidu max %.3e après %d itérations",
            p.degree, max(residuals), iterations,
        )

    return RootSet(
        roots=roots,
        residuals=residuals,
        converged=converged,
        iterations=iterations,
        clusters=tuple(clusters),
    )


def critical_points(p: Polynomial) -> List[CriticalPoint]:
    """Racines distinctes de p' avec leur multiplicité"""
    if p.degree < 2:
        raise PolynomialError(f"degree {p.degree} < 2: no critical points to analyse")

    rs = find_roots(derivative(p))
    if not rs.converged:
        raise OracleConvergenceError(
            f"derivative roots did not converge (max residual {max(rs.residuals):.3e})"
        )
    return [CriticalPoint(location=loc, multiplicity=mult) for loc, mult in rs.clusters]


def nearest_root_distance(rs: RootSet, center: complex) -> float:
    """min_i |ξ_i − ζ|"""
    if not rs.roots:
        raise ValueError("empty root set")
    return float(np.min(np.abs(np.asarray(rs.roots) - complex(center))))


def angle_key(z: complex) -> Tuple[float, float]:
    """Clé de tri déterministe : argument puis module"""
    z = complex(z)
    return round(math.atan2(z.imag, z.real), 12), abs(z)


def sort_by_angle(points: List[complex]) -> List[complex]:
    return sorted(points, key=angle_key)
