"""
Verification suites behind `app.py verify`.

Every suite takes a Precision and returns a list of TheoremReport; a check passes
when |lhs - rhs| <= tol · max(1, |lhs|, |rhs|).
"""

from fractions import Fraction
import logging
import math

import mpmath
import numpy as np

from arith import (
    L_chi_2,
    dedekind_zeta_minus1,
    fundamental_discriminants,
    local_divisor_sum,
    split_discriminant,
    xi_twisted,
)
from eisenstein import cohen_H
from green_integrals import (
    EULER_GAMMA,
    LOG_4PI,
    TheoremReport,
    degree_check,
    derivative_identity_check,
    integral_identity_check,
)
from siegel import majorant_form, majorant_gram, q_form, random_point, siegel_residual
from specfun import I3_minus, I3_plus, J_minus, J_plus
from volumes import HG_TO_H2, V22, hirzebruch_vol, humbert_V13

logger = logging.getLogger(__name__)

REDUCTION_GRID = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
INTEGRAL_GRID_M = (Fraction(1), Fraction(2), Fraction(5), Fraction(-1), Fraction(-2))
INTEGRAL_GRID_A = (0.5, 1.0, 2.0, 5.0)
FIELD_DISCRIMINANTS = (5, 8, 12, 13)
MAJORANT_SAMPLES = 100
MAJORANT_SEED = 20240501


def _case(m):
    m = Fraction(m)
    gamma = 0 if m.denominator == 1 else 1
    return split_discriminant(gamma, m)


def divisor_sum_suite(prec, max_discriminant=200, max_conductor=50):
    reports = []
    for D0 in fundamental_discriminants(max_discriminant):
        mismatch = sum(
            abs(local_divisor_sum(D0, f) - xi_twisted(D0, f)) for f in range(1, max_conductor + 1)
        )
        reports.append(TheoremReport(
            name="divisor-sum",
            lhs=float(mismatch),
            rhs=0.0,
            inputs={"D0": D0, "f_max": max_conductor},
            route_labels=("sum |f^3 sigma - xi|", "0"),
        ))
    return reports


def cohen_routes_suite(prec, max_index=400):
    reports = []
    for four_m in range(1, max_index + 1):
        if four_m % 4 not in (0, 1):
            continue
        c = split_discriminant(0 if four_m % 4 == 0 else 1, Fraction(four_m, 4))
        numeric = -L_chi_2(c.D0, prec, method="hurwitz") * c.D0 ** 1.5 * xi_twisted(c.D0, c.f) / (2.0 * math.pi ** 2)
        reports.append(TheoremReport(
            name="cohen-routes",
            lhs=float(cohen_H(c).value),
            rhs=float(numeric),
            inputs={"m": c.m, "N": c.D0 * c.f ** 2, "D0": c.D0, "f": c.f},
            route_labels=("L(-1) xi", "-L(2) D0^(3/2) xi / (2 pi^2)"),
        ))
    return reports


def degree_suite(prec):
    indices = [Fraction(m) for m in range(1, 31)] + [Fraction(4 * k + 1, 4) for k in range(16)]
    return [degree_check(_case(m), prec) for m in indices]


def reduction_suite(prec):
    reports = []
    for a in REDUCTION_GRID:
        v = a / (4.0 * math.pi)
        reports.append(TheoremReport(
            name="reduction",
            lhs=I3_plus(v, 1, prec).value,
            rhs=J_plus(1.5, a, prec).value / 3.0,
            inputs={"m": 1, "a": a},
            route_labels=("I3+", "J+(3/2,a)/3"),
        ))
        lhs = I3_minus(v, -1, prec).value
        J = J_minus(1.5, a, prec).value / 3.0
        reports.append(TheoremReport(
            name="reduction",
            lhs=lhs,
            rhs=math.exp(-a) * J,
            inputs={"m": -1, "a": a},
            route_labels=("I3-", "exp(-|a|) J-(3/2,|a|)/3"),
            sign_note=f"ratio to the exp(+|a|) variant: {lhs / (math.exp(a) * J):.6e}",
        ))
    return reports


def green_integral_suite(prec):
    reports = []
    for m in INTEGRAL_GRID_M:
        c = _case(m)
        for a in INTEGRAL_GRID_A:
            reports.append(integral_identity_check(c, a / (4.0 * math.pi * abs(float(m))), prec))
    for m in (Fraction(5, 4), Fraction(-3, 4)):
        reports.append(integral_identity_check(_case(m), 1.0 / (4.0 * math.pi * abs(float(m))), prec))
    return reports


def derivative_suite(prec):
    star = -(LOG_4PI + EULER_GAMMA)
    reports = []
    for m in (Fraction(1), Fraction(2), Fraction(5), Fraction(5, 4)):
        c = _case(m)
        for v in (0.05, 0.2, 1.0):
            for kappa in (0.0, 0.5):
                reports.append(derivative_identity_check(c, v, kappa, star, prec))
    reports.append(derivative_identity_check(_case(-1), 0.2, 0.0, 0.0, prec))
    return reports


def functional_equation_suite(prec):
    reports = []
    for dK in FIELD_DISCRIMINANTS:
        zeta_K2 = math.pi ** 2 / 6.0 * L_chi_2(dK, prec, method="hurwitz")
        reports.append(TheoremReport(
            name="functional-equation",
            lhs=float(dedekind_zeta_minus1(dK)),
            rhs=zeta_K2 * dK ** 1.5 / (4.0 * math.pi ** 4),
            inputs={"dK": dK},
            route_labels=("zeta_K(-1)", "zeta_K(2) dK^(3/2) / (4 pi^4)"),
        ))
    return reports


def volumes_suite(prec):
    catalan = float(mpmath.catalan)
    humbert = humbert_V13(-4, prec)
    reports = [
        TheoremReport("volumes", humbert.value, catalan / 3.0, {"dK": -4}, ("V13(-4)", "G/3")),
        TheoremReport("volumes", humbert.value, humbert.alternate, {"dK": -4}, ("L(2) form", "zeta_K(2) form")),
        TheoremReport(
            "volumes", float(hirzebruch_vol(5, 1, prec).exact_part), 1.0 / 15.0, {"dK": 5, "f": 1},
            ("2 zeta_K(-1)", "1/15"),
        ),
    ]
    for dK in (5, 8):
        v22 = V22(dK, prec)
        reports.append(TheoremReport("volumes", v22.value, v22.alternate, {"dK": dK}, ("L(2) route", "8 pi^2 zeta_K(-1)")))
        reports.append(TheoremReport(
            "volumes", v22.value, HG_TO_H2 * hirzebruch_vol(dK, 1, prec).value, {"dK": dK},
            ("V22", "(2 pi)^2 Hirzebruch"),
        ))
    return reports


def majorant_suite(prec, samples=MAJORANT_SAMPLES, seed=MAJORANT_SEED):
    rng = np.random.default_rng(seed)
    worst_residual = 0.0
    worst_gap = 0.0
    for _ in range(samples):
        z = random_point(rng)
        worst_residual = max(worst_residual, siegel_residual(majorant_gram(z)))
        x = rng.integers(-5, 6, size=5)
        gap = majorant_form(z, x) - abs(2.0 * float(q_form(x)))
        worst_gap = max(worst_gap, -gap)
    return [
        TheoremReport("majorant", worst_residual, 0.0, {"samples": samples}, ("max |P Q^-1 P - Q|", "0")),
        TheoremReport("majorant", worst_gap, 0.0, {"samples": samples}, ("max(|(x,x)| - (x,x)_z, 0)", "0")),
    ]


SUITES = {
    "divisor-sum": divisor_sum_suite,
    "cohen-routes": cohen_routes_suite,
    "degree": degree_suite,
    "reduction": reduction_suite,
    "green-integral": green_integral_suite,
    "derivative": derivative_suite,
    "functional-equation": functional_equation_suite,
    "volumes": volumes_suite,
    "majorant": majorant_suite,
}

# names the divisor-sum suite is also known by on the command line
SUITE_ALIASES = {
    "repi8": "divisor-sum",
}


def run_suites(names, prec, tol):
    """Run the named suites (all when names is empty); returns (reports, all_passed)."""
    names = [SUITE_ALIASES.get(name, name) for name in names] or list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
    reports = []
    for name in names:
        suite_reports = SUITES[name](prec)
        failed = [r for r in suite_reports if not r.passed(tol)]
        for report in failed:
            logger.warning("%s failed: lhs=%.15g rhs=%.15g inputs=%s", name, report.lhs, report.rhs, report.inputs)
        logger.info("%s: %d checks, %d failed", name, len(suite_reports), len(failed))
        reports.extend(suite_reports)
    return reports, all(r.passed(tol) for r in reports)
