from fractions import Fraction

import pytest

from verify import (
    SUITE_ALIASES,
    SUITES,
    cohen_routes_suite,
    divisor_sum_suite,
    functional_equation_suite,
    majorant_suite,
    reduction_suite,
    run_suites,
    volumes_suite,
)

TOL = 1e-9


def test_divisor_sum_suite(prec):
    reports = divisor_sum_suite(prec, max_discriminant=30, max_conductor=12)
    assert reports
    assert all(report.lhs == 0.0 for report in reports)


def test_cohen_routes_suite(prec):
    reports = cohen_routes_suite(prec, max_index=80)
    assert len(reports) == 40
    assert all(report.passed(TOL) for report in reports)
    assert all(type(report.rhs) is float for report in reports)
    assert {report.inputs["N"] for report in reports if report.inputs["m"] == Fraction(5, 4)} == {20}


def test_reduction_suite(prec):
    reports = reduction_suite(prec)
    assert len(reports) == 12
    assert all(report.passed(TOL) for report in reports)


def test_functional_equation_and_volumes(prec):
    assert all(report.passed(TOL) for report in functional_equation_suite(prec))
    assert all(report.passed(TOL) for report in volumes_suite(prec))


def test_majorant_suite(prec):
    reports = majorant_suite(prec, samples=10)
    assert [report.passed(TOL) for report in reports] == [True, True]


def test_run_suites(prec):
    reports, passed = run_suites(["degree", "functional-equation"], prec, 1e-6)
    assert passed
    assert {report.name for report in reports} == {"degree", "functional-equation"}


def test_run_suites_resolves_aliases(prec):
    assert set(SUITE_ALIASES.values()) <= set(SUITES)
    reports, passed = run_suites(["repi8"], prec, 1e-6)
    assert passed
    assert {report.name for report in reports} == {"divisor-sum"}


def test_run_suites_rejects_unknown_name(prec):
    with pytest.raises(KeyError):
        run_suites(["no-such-suite"], prec, 1e-6)


def test_suite_names():
    assert sorted(SUITES) == [
        "cohen-routes",
        "degree",
        "derivative",
        "divisor-sum",
        "functional-equation",
        "green-integral",
        "majorant",
        "reduction",
        "volumes",
    ]
