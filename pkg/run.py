"""
🚀 Script de Lancement RootBounds
Interface en ligne de commande : analyse, couverture, contre-exemples, γ et balayages
"""

import argparse
import logging
import math
import sys
from typing import List, Optional, TextIO

import pandas as pd
from pydantic import ValidationError

from config import (
    DEFAULT_IOTA1,
    DEFAULT_IOTA2,
    DEFAULT_RANDOM_COUNT,
    DEFAULT_SEED,
    DEFAULT_SWEEP_K,
    DEFAULT_SWEEP_N_LIST,
    EXIT_BOUND_VIOLATION,
    EXIT_OK,
    EXIT_ORACLE_FAILURE,
    EXIT_USAGE,
    N_JOBS,
    SLOPE_TOLERANCE,
    setup_logging,
)
from cli_report import (
    AnalysisOptions,
    ComplexValue,
    analyze,
    dumps_json,
    exit_status,
    format_summary,
    load_polynomial,
    report_to_json,
    write_annuli_csv,
)
from conjecture_lab import build_annuli, check_coverage, counterexample_family, growth_sweep
from corpus_generator import PolynomialGenerator
from exceptions import OracleConvergenceError, RootBoundsError
from lower_bounds import OmegaCondition, gamma_first_order, gamma_omega

logger = logging.getLogger(__name__)


class UsageError(RootBoundsError, ValueError):
    """Arguments de ligne de commande invalides"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _complex_pair(text: str) -> ComplexValue:
    try:
        re_part, im_part = (float(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from exc
    return ComplexValue(re=re_part, im=im_part)


def _iota(text: str) -> float:
    value = float(text)
    if math.isnan(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"iota must be positive, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rootbounds", description="🧮 Bornes de distance aux racines autour des points critiques")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING...")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="Encadrement complet d'un polynôme")
    p_analyze.add_argument("source", help="Fichier de coefficients ou - pour stdin")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("--iota1", type=_iota, default=DEFAULT_IOTA1)
    p_analyze.add_argument("--iota2", type=_iota, default=DEFAULT_IOTA2)
    p_analyze.add_argument("--eps", type=float, default=None, help="ε imposé pour la condition Ω")
    p_analyze.add_argument("--center", type=_complex_pair, action="append", default=[], help="Centre supplémentaire RE,IM")
    p_analyze.add_argument("--csv-annuli", default=None)
    p_analyze.add_argument("--n-jobs", type=int, default=N_JOBS)
    p_analyze.add_argument("--inject-upper-scale", type=float, default=1.0, help=argparse.SUPPRESS)

    p_counter = sub.add_parser("counterexample", help="Famille z^(n+1) − (n+1)z")
    p_counter.add_argument("--n", type=int, required=True)
    p_counter.add_argument("--k", type=int, default=None)
    p_counter.add_argument("--json", action="store_true")

    p_coverage = sub.add_parser("coverage", help="Couverture des racines par les anneaux")
    p_coverage.add_argument("source")
    p_coverage.add_argument("--iota1", type=_iota, default=DEFAULT_IOTA1)
    p_coverage.add_argument("--iota2", type=_iota, default=DEFAULT_IOTA2)
    p_coverage.add_argument("--csv-annuli", default=None)
    p_coverage.add_argument("--json", action="store_true")
    p_coverage.add_argument("--n-jobs", type=int, default=N_JOBS)

    p_gamma = sub.add_parser("gamma", help="Constante γ(Ω, ε)")
    p_gamma.add_argument("--omega", type=_int_list, default=[1])
    p_gamma.add_argument("--eps", type=float, default=0.0)

    p_sweep = sub.add_parser("sweep", help="Balayages sur une famille")
    p_sweep.add_argument("--family", choices=["counterexample", "random"], default="counterexample")
    p_sweep.add_argument("--n-list", type=_int_list, default=DEFAULT_SWEEP_N_LIST)
    p_sweep.add_argument("--k", type=int, default=DEFAULT_SWEEP_K)
    p_sweep.add_argument("--count", type=int, default=DEFAULT_RANDOM_COUNT)
    p_sweep.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_sweep.add_argument("--json", action="store_true")
    p_sweep.add_argument("--n-jobs", type=int, default=N_JOBS)

    return parser


class RootBoundsLauncher:
    """Lanceur des sous-commandes RootBounds"""

    def __init__(self, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None):
        self.stdin = stdin or sys.stdin
        self.stdout = stdout or sys.stdout

    def _print(self, text: str = ""):
        print(text, file=self.stdout)

    def _load(self, source: str):
        return load_polynomial(source, self.stdin.read() if source == "-" else None)

    def analyze(self, args) -> int:
        p = self._load(args.source)
        options = AnalysisOptions(
            iota1=args.iota1,
            iota2=None if math.isinf(args.iota2) else args.iota2,
            epsilon=args.eps,
            extra_centers=args.center,
            n_jobs=args.n_jobs,
            upper_scale=args.inject_upper_scale,
        )
        report = analyze(p, options)
        self._print(report_to_json(report) if args.json else format_summary(report))

        if args.csv_annuli and report.converged:
            centers = [cp.location.value for cp in report.critical_points]
            write_annuli_csv(build_annuli(p, args.iota1, args.iota2, centers=centers), args.csv_annuli)
        return exit_status(report)

    def counterexample(self, args) -> int:
        record = counterexample_family(args.n, ks=[args.k] if args.k else None)
        if args.json:
            self._print(dumps_json(record_frame(record).to_dict(orient="records")))
        else:
            self._print(f"🧪 z^{args.n + 1} − {args.n + 1}z : ρ^(2) = √(2/(n+1)) = {record.rho2_closed_form:.12g}")
            self._print(record_frame(record).to_string(index=False))
            self._print(f"ℹ️ facteur (n+1)^(1/(n+1)) de la littérature non observé : {record.literature_factor:.12g}")
        if not record.growth_bound_holds:
            self._print("🚨 Inégalité de croissance violée")
            return EXIT_BOUND_VIOLATION
        return EXIT_OK

    def coverage(self, args) -> int:
        p = self._load(args.source)
        report = check_coverage(p, args.iota1, args.iota2, n_jobs=args.n_jobs)
        if args.json:
            payload = {
                "iota1": report.iota1,
                "iota2": None if math.isinf(report.iota2) else report.iota2,
                "covered": report.covered,
                "uncovered_roots": [ComplexValue.of(z).model_dump() for z in report.uncovered_roots],
            }
            self._print(dumps_json(payload))
        else:
            verdict = "✅ toutes les racines couvertes" if report.covered else (
                f"⚠️ {len(report.uncovered_roots)} racine(s) non couverte(s) : "
                + ", ".join(f"{z:.6g}" for z in report.uncovered_roots)
            )
            self._print(f"🎯 {len(report.annuli)} anneaux [{args.iota1:g}ρ, {args.iota2:g}ρ] : {verdict}")
        if args.csv_annuli:
            write_annuli_csv(report.annuli, args.csv_annuli)
        return EXIT_OK

    def gamma(self, args) -> int:
        cond = OmegaCondition(omega=tuple(args.omega), epsilon=args.eps)
        value = gamma_omega(cond)
        self._print(f"γ(Ω={list(cond.omega)}, ε={cond.epsilon:g}) = {value:.15g}")
        if cond.omega == (1,):
            self._print(f"   premier ordre : {gamma_first_order(cond.epsilon):.15g}")
        return EXIT_OK

    def sweep(self, args) -> int:
        if args.family == "counterexample":
            return self._sweep_counterexample(args)
        return self._sweep_random(args)

    def _sweep_counterexample(self, args) -> int:
        table = growth_sweep(args.n_list, args.k, n_jobs=args.n_jobs)
        if args.json:
            self._print(dumps_json(table.to_dict(orient="records")))
        else:
            self._print(table.to_string(index=False))

        if "slope" not in table.attrs:
            return EXIT_OK
        slope, expected = table.attrs["slope"], table.attrs["expected_slope"]
        if not args.json:
            self._print(f"📈 pente log-log {slope:.4f} (attendue {expected:.4f})")
        bounds_ok = bool((table["measured_ratio"] >= table["lower_bound"] * (1.0 - 1e-9)).all())
        if abs(slope - expected) > SLOPE_TOLERANCE or not bounds_ok:
            return EXIT_BOUND_VIOLATION
        return EXIT_OK

    def _sweep_random(self, args) -> int:
        corpus = PolynomialGenerator(args.seed).generate_corpus(args.count)
        options = AnalysisOptions(n_jobs=args.n_jobs)
        violations, failures = 0, 0
        for p in corpus:
            status = exit_status(analyze(p, options))
            violations += status == EXIT_BOUND_VIOLATION
            failures += status == EXIT_ORACLE_FAILURE

        self._print(f"🔍 {len(corpus)} polynômes : {violations} violation(s), {failures} échec(s) d'oracle")
        if failures:
            return EXIT_ORACLE_FAILURE
        if violations:
            return EXIT_BOUND_VIOLATION
        return EXIT_OK

    def dispatch(self, args) -> int:
        return getattr(self, args.command)(args)


def record_frame(record) -> pd.DataFrame:
    """Table k → rapport mesuré / forme close"""
    ks = sorted(record.measured_ratio)
    return pd.DataFrame({
        "k": ks,
        "measured_ratio": [record.measured_ratio[k] for k in ks],
        "closed_form": [record.ratio_closed_form[k] for k in ks],
    })


def main(argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> int:
    """Point d'entrée : renvoie le code de sortie"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    setup_logging(args.log_level)
    launcher = RootBoundsLauncher(stdin=stdin, stdout=stdout)
    try:
        return launcher.dispatch(args)
    except OracleConvergenceError as exc:
        logger.error("Oracle non convergé: %s", exc)
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_ORACLE_FAILURE
    except (ValueError, ArithmeticError, ValidationError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
