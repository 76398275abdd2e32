"""
📋 Rapports RootBounds
Lecture des coefficients, analyse par centre (encadrement exclusion / inclusion)
et rapport JSON reproductible
"""

import json
import logging
import math
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from config import (
    CLUSTER_RTOL,
    DEFAULT_IOTA1,
    DEFAULT_IOTA2,
    EXIT_BOUND_VIOLATION,
    EXIT_OK,
    EXIT_ORACLE_FAILURE,
    LOWER_SLACK,
    N_JOBS,
    UPPER_SLACK,
)
from conjecture_lab import Annulus, check_coverage
from exceptions import (
    BracketError,
    ConditionError,
    OracleConvergenceError,
    ParseError,
    PolynomialError,
)
from lower_bounds import (
    OmegaFailure,
    check_omega_condition,
    exclusion_radius_basic,
    exclusion_radius_omega,
    gamma_omega,
    measured_epsilon,
    sigma_radius,
    theta_bound,
)
from poly_core import Polynomial, coefficients_from_pairs
from radius_profile import RadiusProfile, rho_profile
from root_oracle import RootSet, angle_key, critical_points, find_roots, nearest_root_distance
from upper_bounds import general_bounds, inclusion_radius_critical, inclusion_radius_multiplicity

logger = logging.getLogger(__name__)

# Signe optionnel, flottant décimal, un espace, flottant décimal
_FLOAT = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_LINE = re.compile(rf"^({_FLOAT}) ({_FLOAT})$")


def _finite(x: Optional[float]) -> Optional[float]:
    """inf / nan → None (JSON sans Infinity)"""
    if x is None or not math.isfinite(x):
        return None
    return float(x)


# ===== MODÈLES PYDANTIC =====

class ComplexValue(BaseModel):
    """Nombre complexe sérialisé"""
    model_config = ConfigDict(frozen=True)

    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


class CoefficientInput(BaseModel):
    """Entrée structurée {"coeffs": [[re, im], ...]}"""
    coeffs: List[Tuple[float, float]] = Field(..., min_length=1)


class AnalysisOptions(BaseModel):
    """Options d'analyse"""
    iota1: float = Field(DEFAULT_IOTA1, gt=0, description="Constante intérieure ι₁")
    iota2: Optional[float] = Field(DEFAULT_IOTA2, gt=0, description="Constante extérieure ι₂ (None = +∞)")
    epsilon: Optional[float] = Field(None, ge=0, description="ε imposé ; None = ε mesuré au centre")
    extra_centers: List[ComplexValue] = Field(default_factory=list, description="Centres supplémentaires")
    n_jobs: int = Field(N_JOBS, description="Processus joblib")
    upper_scale: float = Field(1.0, gt=0, description="Facteur appliqué aux bornes supérieures (test)")

    @model_validator(mode="after")
    def _ordered_iotas(self):
        if self.iota2 is not None and self.iota1 > self.iota2:
            raise ValueError(f"iota1 = {self.iota1} > iota2 = {self.iota2}")
        return self

    @property
    def outer_constant(self) -> float:
        return math.inf if self.iota2 is None else self.iota2


class RootRecord(BaseModel):
    location: ComplexValue
    residual: float


class CriticalPointRecord(BaseModel):
    location: ComplexValue
    multiplicity: int = Field(..., ge=1)


class ProfileRecord(BaseModel):
    """Profil ρ^(k) ; None pour un rayon infini"""
    rho_k: List[Optional[float]]
    rho_min_from2: Optional[float]
    rho_min_full: Optional[float]
    argmin_from2: int
    argmin_full: int
    degenerate: bool

    @classmethod
    def of(cls, profile: RadiusProfile) -> "ProfileRecord":
        return cls(
            rho_k=[_finite(r) for r in profile.rho_k],
            rho_min_from2=_finite(profile.rho_min_from2),
            rho_min_full=_finite(profile.rho_min_full),
            argmin_from2=profile.argmin_from2,
            argmin_full=profile.argmin_full,
            degenerate=profile.degenerate,
        )


class LowerBoundsRecord(BaseModel):
    """Rayons d'exclusion ; None si non applicable"""
    basic: Optional[float] = None
    omega: List[int] = Field(default_factory=list)
    epsilon: Optional[float] = None
    gamma: Optional[float] = None
    omega_gamma: Optional[float] = None
    sigma: Optional[float] = None

    @property
    def best(self) -> float:
        values = [v for v in (self.basic, self.omega_gamma, self.sigma) if v is not None]
        return max(values) if values else 0.0


class UpperBoundsRecord(BaseModel):
    """Rayons d'inclusion indexés par k"""
    general: Dict[int, float] = Field(default_factory=dict)
    critical: Dict[int, float] = Field(default_factory=dict)
    blanket: Optional[float] = None
    multiplicity: Dict[int, float] = Field(default_factory=dict)
    best: Optional[float] = None


class CenterRecord(BaseModel):
    center: ComplexValue
    kind: str = Field(..., description="critical | extra")
    multiplicity: int = Field(0, ge=0)
    profile: ProfileRecord
    lower: LowerBoundsRecord
    upper: UpperBoundsRecord
    nearest_root_distance: float
    sandwich_ok: bool


class ConjectureSection(BaseModel):
    iota1: float
    iota2: Optional[float]
    covered: bool
    uncovered_roots: List[ComplexValue]


class AnalysisReport(BaseModel):
    """Rapport complet d'analyse"""
    degree: int
    converged: bool
    roots: List[RootRecord]
    critical_points: List[CriticalPointRecord]
    centers: List[CenterRecord]
    conjecture: Optional[ConjectureSection] = None
    options: AnalysisOptions

    @property
    def violations(self) -> List[CenterRecord]:
        return [c for c in self.centers if not c.sandwich_ok]


# ===== LECTURE =====

def parse_polynomial(text: str) -> Polynomial:
    """Une ligne "re im" par coefficient, degrés croissants ; ou JSON {"coeffs": [[re, im], ...]}"""
    if not text.strip():
        raise ParseError("empty input")

    if text.lstrip().startswith("{"):
        try:
            payload = CoefficientInput.model_validate_json(text)
        except ValidationError as exc:
            raise ParseError(f"invalid coefficient object: {exc.errors()[0]['msg']}", line=1) from exc
        return coefficients_from_pairs(payload.coeffs)

    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()

    pairs = []
    for number, line in enumerate(lines, start=1):
        match = _LINE.match(line)
        if match is None:
            raise ParseError(f"expected 're im', got {line!r}", line=number)
        pairs.append((float(match.group(1)), float(match.group(2))))
    return coefficients_from_pairs(pairs)


def load_polynomial(source: str, stdin_text: Optional[str] = None) -> Polynomial:
    """Fichier ou "-" pour l'entrée standard"""
    if source == "-":
        return parse_polynomial(stdin_text or "")
    path = Path(source)
    if not path.exists():
        raise ParseError(f"file not found: {source}")
    return parse_polynomial(path.read_text())


# ===== ANALYSE =====

def _lower_bounds(profile: RadiusProfile, multiplicity: int, epsilon: Optional[float]) -> LowerBoundsRecord:
    record = LowerBoundsRecord(
        basic=exclusion_radius_basic(profile),
        sigma=sigma_radius(profile.expansion),
    )
    if multiplicity < 1:
        return record

    e = profile.expansion
    omega = tuple(range(1, min(multiplicity, profile.n - 1) + 1))
    eps = epsilon if epsilon is not None else measured_epsilon(e, omega, theta_bound(e))
    record.omega, record.epsilon = list(omega), _finite(eps)
    if eps * len(omega) >= 1.0:
        logger.info("Condition Ω hors régime en %s (ε·h = %.3e)", profile.center, eps * len(omega))
        return record

    cond = check_omega_condition(e, omega, eps)
    if isinstance(cond, OmegaFailure):
        logger.info("Condition Ω violée en %s (indice %d)", profile.center, cond.index)
        return record
    try:
        record.gamma = gamma_omega(cond)
        record.omega_gamma = exclusion_radius_omega(profile, cond)
    except (BracketError, ConditionError) as exc:
        logger.warning("Borne γ(Ω, ε) indisponible en %s: %s", profile.center, exc)
    return record


def _upper_bounds(profile: RadiusProfile, multiplicity: int, scale: float) -> UpperBoundsRecord:
    record = UpperBoundsRecord(general=general_bounds(profile))
    if multiplicity >= 1 and profile.is_critical:
        critical = inclusion_radius_critical(profile)
        record.critical, record.blanket = critical.per_k, critical.blanket
        try:
            record.multiplicity = inclusion_radius_multiplicity(profile, multiplicity)
        except ConditionError as exc:
            logger.debug("Borne de multiplicité ignorée en %s: %s", profile.center, exc)

    if scale != 1.0:
        record.general = {k: v * scale for k, v in record.general.items()}
        record.critical = {k: v * scale for k, v in record.critical.items()}
        record.multiplicity = {k: v * scale for k, v in record.multiplicity.items()}
        record.blanket = None if record.blanket is None else record.blanket * scale

    candidates = [*record.general.values(), *record.critical.values(), *record.multiplicity.values()]
    if record.blanket is not None:
        candidates.append(record.blanket)
    record.best = min(candidates) if candidates else None
    return record


def analyze_center(
    p: Polynomial,
    center: complex,
    multiplicity: int,
    roots: RootSet,
    options: AnalysisOptions,
) -> CenterRecord:
    """Encadrement de la distance à la racine la plus proche en un centre"""
    profile = rho_profile(p, center)
    distance = nearest_root_distance(roots, center)
    kind = "critical" if multiplicity >= 1 else "extra"

    if profile.degenerate:
        # Centre racine : rayon nul des deux côtés
        return CenterRecord(
            center=ComplexValue.of(center),
            kind=kind,
            multiplicity=multiplicity,
            profile=ProfileRecord.of(profile),
            lower=LowerBoundsRecord(),
            upper=UpperBoundsRecord(best=0.0),
            nearest_root_distance=distance,
            sandwich_ok=distance <= CLUSTER_RTOL * (1.0 + abs(center)),
        )

    lower = _lower_bounds(profile, multiplicity, options.epsilon)
    upper = _upper_bounds(profile, multiplicity, options.upper_scale)

    lower_ok = lower.best * (1.0 - LOWER_SLACK) < distance
    upper_ok = upper.best is None or distance <= upper.best * (1.0 + UPPER_SLACK)
    if not (lower_ok and upper_ok):
        logger.warning(
            "Encadrement violé en %s: %.17g < %.17g <= %s",
            center, lower.best, distance, upper.best,
        )

    return CenterRecord(
        center=ComplexValue.of(center),
        kind=kind,
        multiplicity=multiplicity,
        profile=ProfileRecord.of(profile),
        lower=lower,
        upper=upper,
        nearest_root_distance=distance,
        sandwich_ok=lower_ok and upper_ok,
    )


def analyze(p: Polynomial, options: Optional[AnalysisOptions] = None) -> AnalysisReport:
    """Analyse complète : racines, points critiques, bornes par centre, conjecture"""
    options = options or AnalysisOptions()
    if p.degree < 2:
        raise PolynomialError(f"degree {p.degree} < 2: nothing to analyse")

    roots = find_roots(p)
    root_records = [
        RootRecord(location=ComplexValue.of(z), residual=r) for z, r in zip(roots.roots, roots.residuals)
    ]
    try:
        critical = sorted(critical_points(p), key=lambda cp: angle_key(cp.location))
    except OracleConvergenceError as exc:
        logger.warning("Points critiques indisponibles: %s", exc)
        critical, converged = [], False
    else:
        converged = roots.converged

    if not converged:
        return AnalysisReport(
            degree=p.degree,
            converged=False,
            roots=root_records,
            critical_points=[],
            centers=[],
            options=options,
        )

    tasks = [(cp.location, cp.multiplicity) for cp in critical]
    tasks += [(c.value, 0) for c in sorted(options.extra_centers, key=lambda c: angle_key(c.value))]
    logger.info("Analyse de %d centres (degré %d)", len(tasks), p.degree)
    centers = Parallel(n_jobs=options.n_jobs)(
        delayed(analyze_center)(p, center, mult, roots, options) for center, mult in tasks
    )

    coverage = check_coverage(
        p,
        options.iota1,
        options.outer_constant,
        roots=roots,
        centers=[cp.location for cp in critical],
        n_jobs=options.n_jobs,
    )

    return AnalysisReport(
        degree=p.degree,
        converged=True,
        roots=root_records,
        critical_points=[
            CriticalPointRecord(location=ComplexValue.of(cp.location), multiplicity=cp.multiplicity)
            for cp in critical
        ],
        centers=centers,
        conjecture=ConjectureSection(
            iota1=options.iota1,
            iota2=options.iota2,
            covered=coverage.covered,
            uncovered_roots=[ComplexValue.of(z) for z in coverage.uncovered_roots],
        ),
        options=options,
    )


def exit_status(report: AnalysisReport) -> int:
    """3 si l'oracle n'a pas convergé, 2 si un encadrement est violé, 0 sinon"""
    if not report.converged:
        return EXIT_ORACLE_FAILURE
    if report.violations:
        return EXIT_BOUND_VIOLATION
    return EXIT_OK


# ===== SORTIES =====

_FLOAT_TAG = "\x00f17:"
_TAGGED_FLOAT = re.compile(r'"\\u0000f17:([^"]*)"')


def _tag_floats(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, (float, np.floating)):
        return _FLOAT_TAG + format(float(value), ".17g") if math.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return {key: _tag_floats(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tag_floats(v) for v in value]
    return value


def dumps_json(payload) -> str:
    """JSON indenté, réels à 17 chiffres significatifs, inf / nan → null"""
    text = json.dumps(_tag_floats(payload), indent=2, ensure_ascii=False)
    return _TAGGED_FLOAT.sub(r"\1", text)


def report_to_json(report: AnalysisReport) -> str:
    return dumps_json(report.model_dump(mode="json"))


def report_from_json(text: str) -> AnalysisReport:
    return AnalysisReport.model_validate_json(text)


def annuli_frame(annuli: Sequence[Annulus]) -> pd.DataFrame:
    return pd.DataFrame({
        "center_re": [a.center.real for a in annuli],
        "center_im": [a.center.imag for a in annuli],
        "inner": [a.inner for a in annuli],
        "outer": [a.outer for a in annuli],
    })


def write_annuli_csv(annuli: Sequence[Annulus], path) -> Path:
    """CSV center_re,center_im,inner,outer pour le tracé"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    annuli_frame(annuli).to_csv(path, index=False, float_format="%.17g")
    logger.info("Anneaux écrits dans %s", path)
    return path


def format_summary(report: AnalysisReport) -> str:
    """Résumé lisible pour la console"""
    lines = [f"🧮 Polynôme de degré {report.degree}"]
    if not report.converged:
        lines.append("❌ Oracle non convergé : aucune borne vérifiée")
        return "\n".join(lines)

    worst = max(r.residual for r in report.roots)
    lines.append(f"🔍 {len(report.roots)} racines (résidu max {worst:.2e}), {len(report.critical_points)} points critiques")
    for c in report.centers:
        flag = "✅" if c.sandwich_ok else "🚨"
        upper = "-" if c.upper.best is None else f"{c.upper.best:.6g}"
        lines.append(
            f"  {flag} ζ = {c.center.value:.6g} ({c.kind}) : "
            f"{c.lower.best:.6g} < d = {c.nearest_root_distance:.6g} ≤ {upper}"
        )
    if report.conjecture is not None:
        conj = report.conjecture
        iota2 = "∞" if conj.iota2 is None else f"{conj.iota2:g}"
        verdict = "✅ couvertes" if conj.covered else f"⚠️ {len(conj.uncovered_roots)} racine(s) non couverte(s)"
        lines.append(f"🎯 Anneaux [{conj.iota1:g}ρ, {iota2}ρ] : {verdict}")
    return "\n".join(lines)


def report_to_dict(report: AnalysisReport) -> dict:
    return report.model_dump(mode="json")
