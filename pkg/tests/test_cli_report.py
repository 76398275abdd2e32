"""
Tests de la lecture des coefficients, de l'analyse et du rapport JSON
"""

import math

import pandas as pd
import pytest

from cli_report import (
    AnalysisOptions,
    ComplexValue,
    analyze,
    dumps_json,
    exit_status,
    format_summary,
    load_polynomial,
    parse_polynomial,
    report_from_json,
    report_to_dict,
    report_to_json,
    write_annuli_csv,
)
from config import EXIT_BOUND_VIOLATION, EXIT_OK, EXIT_ORACLE_FAILURE
from conjecture_lab import build_annuli, counterexample_polynomial
from corpus_generator import PolynomialGenerator
from exceptions import ParseError, PolynomialError
from poly_core import Polynomial


# ===== LECTURE =====

@pytest.mark.parametrize("text, expected", [
    ("-1 0\n0 0\n1 0", [-1, 0, 1]),
    ("0 0\n-4 0\n0 0\n0 0\n1 0\n", [0, -4, 0, 0, 1]),
    ("1.5e-3 -2\n+1 .5\n", [1.5e-3 - 2j, 1 + 0.5j]),
])
def test_parse_text(text, expected):
    assert parse_polynomial(text) == Polynomial(expected)


def test_parse_structured():
    assert parse_polynomial('{"coeffs": [[-1, 0], [0, 0], [1, 0]]}') == Polynomial([-1, 0, 1])


def test_parse_empty():
    with pytest.raises(ParseError, match="empty input"):
        parse_polynomial("")


@pytest.mark.parametrize("text, line", [
    ("1 0\n2  0\n", 2),
    ("1 0\n2 0\nabc\n", 3),
    ("1\n", 1),
    ("1 0\n\n1 0\n", 2),
])
def test_parse_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_parse_bad_structured():
    with pytest.raises(ParseError):
        parse_polynomial('{"coeffs": "nope"}')


def test_parse_zero_polynomial():
    with pytest.raises(PolynomialError):
        parse_polynomial("0 0\n0 0\n")


def test_load_fixtures(data_dir):
    assert load_polynomial(str(data_dir / "z2_minus_1.txt")) == Polynomial([-1, 0, 1])
    assert load_polynomial(str(data_dir / "z2_minus_1.json")) == Polynomial([-1, 0, 1])
    assert load_polynomial("-", "-1 0\n0 0\n1 0\n") == Polynomial([-1, 0, 1])
    assert load_polynomial(str(data_dir / "counterexample_100.txt")) == counterexample_polynomial(100)
    with pytest.raises(ParseError):
        load_polynomial(str(data_dir / "missing.txt"))


# ===== ANALYSE =====

def test_unit_square_upper_bound_is_attained():
    report = analyze(Polynomial([-1, 0, 1]))
    assert report.converged
    (center,) = report.centers
    assert center.upper.best == pytest.approx(1.0)
    assert center.nearest_root_distance == pytest.approx(1.0)
    assert center.sandwich_ok
    assert exit_status(report) == EXIT_OK


def test_double_quadratic_all_centers_ok():
    report = analyze(PolynomialGenerator.double_quadratic(2))
    assert len(report.centers) == 3
    assert all(c.sandwich_ok for c in report.centers)
    degenerate = [c for c in report.centers if c.profile.degenerate]
    assert len(degenerate) == 2
    assert all(c.lower.best == 0.0 and c.upper.best == 0.0 for c in degenerate)


def test_golden_bound_reported_at_origin():
    report = analyze(PolynomialGenerator.double_quadratic(2))
    origin = next(c for c in report.centers if abs(c.center.value) < 1e-12)
    assert origin.lower.omega == [1]
    assert origin.lower.gamma == pytest.approx(0.6180339887, abs=1e-9)
    assert origin.lower.omega_gamma == pytest.approx(0.6180339887, abs=1e-9)
    assert origin.upper.blanket == pytest.approx(math.sqrt(2))


def test_counterexample_not_covered():
    report = analyze(counterexample_polynomial(100), AnalysisOptions(iota2=5.0))
    assert not report.conjecture.covered
    assert ComplexValue(re=0.0, im=0.0) in report.conjecture.uncovered_roots
    assert exit_status(report) == EXIT_OK


def test_large_counterexample_has_no_violations():
    report = analyze(counterexample_polynomial(100))
    assert report.converged
    assert report.violations == []
    assert not any(c.profile.degenerate for c in report.centers)
    assert exit_status(report) == EXIT_OK


def test_extra_centers_get_general_bounds():
    options = AnalysisOptions(extra_centers=[ComplexValue(re=0.3, im=0.2)])
    report = analyze(Polynomial([0, -4, 0, 0, 1]), options)
    extra = [c for c in report.centers if c.kind == "extra"]
    assert len(extra) == 1
    assert extra[0].upper.critical == {}
    assert extra[0].lower.omega_gamma is None
    assert extra[0].sandwich_ok


def test_fixed_epsilon_too_small_drops_gamma():
    options = AnalysisOptions(epsilon=0.0)
    report = analyze(Polynomial([0, -4, 0, 0, 1]), options)
    # Points critiques approchés : b_1 ≠ 0 exactement, ε = 0 peut échouer sans fausser l'encadrement
    assert all(c.sandwich_ok for c in report.centers)


def test_injected_upper_scale_is_a_violation():
    report = analyze(Polynomial([-1, 0, 1]), AnalysisOptions(upper_scale=0.5))
    assert not report.centers[0].sandwich_ok
    assert exit_status(report) == EXIT_BOUND_VIOLATION


def test_oracle_failure_exit_status():
    report = analyze(Polynomial([-1, 0, 1])).model_copy(update={"converged": False})
    assert exit_status(report) == EXIT_ORACLE_FAILURE


def test_degree_too_low():
    with pytest.raises(PolynomialError):
        analyze(Polynomial([1, 1]))


def test_options_validation():
    with pytest.raises(ValueError):
        AnalysisOptions(iota1=2.0, iota2=1.0)
    assert AnalysisOptions(iota2=None).outer_constant == math.inf


def test_centers_are_ordered_by_angle():
    report = analyze(Polynomial([0, -4, 0, 0, 1]))
    angles = [math.atan2(c.center.im, c.center.re) for c in report.centers]
    assert angles == sorted(angles)


# ===== SORTIES =====

def test_report_round_trip():
    report = analyze(PolynomialGenerator.double_quadratic(2))
    again = report_from_json(report_to_json(report))
    assert again == report
    assert report_to_json(again) == report_to_json(report)


def test_report_json_has_no_infinity():
    text = report_to_json(analyze(Polynomial([-1, 0, 1])))
    assert "Infinity" not in text
    assert report_to_dict(report_from_json(text))["centers"][0]["profile"]["rho_k"][0] is None


def test_annuli_csv(tmp_path):
    annuli = build_annuli(Polynomial([0, -4, 0, 0, 1]), 0.618, 10.0)
    path = write_annuli_csv(annuli, tmp_path / "out" / "annuli.csv")
    frame = pd.read_csv(path)
    assert list(frame.columns) == ["center_re", "center_im", "inner", "outer"]
    assert len(frame) == 3
    assert path.read_text().splitlines()[0] == "center_re,center_im,inner,outer"


def test_summary_text():
    text = format_summary(analyze(Polynomial([-1, 0, 1])))
    assert "degré 2" in text
    assert "✅" in text


def test_json_reals_have_seventeen_digits():
    text = dumps_json({"x": 0.1, "values": [1.5, math.inf], "k": 2, "ok": True, "kind": "extra"})
    assert '"x": 0.10000000000000001' in text
    assert '"k": 2' in text
    assert '"ok": true' in text
    assert "null" in text
    assert '"kind": "extra"' in text


def test_report_json_matches_csv_precision():
    report = analyze(PolynomialGenerator.double_quadratic(2))
    text = report_to_json(report)
    origin = next(c for c in report.centers if abs(c.center.value) < 1e-12)
    assert format(origin.upper.blanket, ".17g") in text
