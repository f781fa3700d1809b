from fractions import Fraction
import math

import mpmath
import pytest

from arith import (
    L_chi_2,
    bernoulli_L_minus1,
    dedekind_zeta_minus1,
    fundamental_discriminants,
    is_fundamental,
    kronecker_chi,
    local_divisor_sum,
    mobius,
    sigma3,
    sigma_gamma_m,
    split_discriminant,
    xi_twisted,
)
from errors import CaseIndexError, ConvergenceError, DiscriminantError
from quadrature import Precision

ODD_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@pytest.mark.parametrize("D, n, expected", [
    (1, 7, 1),
    (-4, 3, -1),
    (5, 5, 0),
    (8, 3, -1),
    (5, 2, -1),
    (-3, 2, -1),
    (-7, 2, 1),
    (12, 2, 0),
])
def test_kronecker_values(D, n, expected):
    assert kronecker_chi(D, n) == expected


def test_kronecker_returns_python_ints():
    for D in (5, -4, 8, -3, 12):
        for n in range(1, 30):
            assert type(kronecker_chi(D, n)) is int
    assert type(xi_twisted(5, 6)) is int


@pytest.mark.parametrize("D", [-4, -3, 5, 8, 12, 13, -7, 21])
def test_kronecker_matches_quadratic_residues(D):
    for p in ODD_PRIMES:
        if D % p == 0:
            assert kronecker_chi(D, p) == 0
            continue
        is_square = any((x * x - D) % p == 0 for x in range(p))
        assert kronecker_chi(D, p) == (1 if is_square else -1)


@pytest.mark.parametrize("D", [-4, 5, 8, 12, -7, -3])
def test_kronecker_multiplicative_and_periodic(D):
    for m in range(1, 60):
        for n in range(1, 60):
            assert kronecker_chi(D, m * n) == kronecker_chi(D, m) * kronecker_chi(D, n)
        assert kronecker_chi(D, m + abs(D)) == kronecker_chi(D, m)


def test_kronecker_rejects_bad_input():
    with pytest.raises(DiscriminantError):
        kronecker_chi(2, 3)
    with pytest.raises(ValueError):
        kronecker_chi(5, 0)


@pytest.mark.parametrize("D, expected", [
    (1, True), (5, True), (8, True), (12, True), (-4, True), (-3, True), (-8, True),
    (4, False), (9, False), (-12, False), (20, False), (2, False), (0, False),
])
def test_is_fundamental(D, expected):
    assert is_fundamental(D) is expected


def test_mobius():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("gamma, m, D0, f", [
    (0, 1, 1, 2),
    (0, 5, 5, 2),
    (1, Fraction(1, 4), 1, 2),
    (0, 2, 8, 1),
    (0, 3, 12, 1),
    (0, -1, -4, 1),
    (1, Fraction(5, 4), 5, 2),
    (1, Fraction(-3, 4), -3, 2),
])
def test_split_discriminant(gamma, m, D0, f):
    c = split_discriminant(gamma, m)
    assert (c.D0, c.f) == (D0, f)
    assert c.delta_gamma == (1 if gamma == 0 else 4)


def test_split_round_trip():
    for m in [m for m in range(-40, 41) if m]:
        c = split_discriminant(0, m)
        assert c.D0 * c.f ** 2 == 4 * m
        assert is_fundamental(c.D0)
    for k in range(-20, 20):
        m = Fraction(4 * k + 1, 4)
        c = split_discriminant(1, m)
        assert c.D0 * c.f ** 2 == 16 * m
        assert is_fundamental(c.D0)


@pytest.mark.parametrize("gamma, m", [(0, 0), (0, Fraction(1, 4)), (1, 1), (2, 1)])
def test_split_rejects_invalid_index(gamma, m):
    with pytest.raises(CaseIndexError):
        split_discriminant(gamma, m)


def test_sigma3():
    assert sigma3(1) == 1
    assert sigma3(2) == 9
    assert sigma3(6) == 252


@pytest.mark.parametrize("D0, f, expected", [(5, 1, 1), (1, 2, 7), (-4, 3, 31)])
def test_xi_twisted(D0, f, expected):
    assert xi_twisted(D0, f) == expected


def test_sigma_gamma_m():
    assert sigma_gamma_m(split_discriminant(0, 1)) == Fraction(7, 8)
    assert sigma_gamma_m(split_discriminant(0, 2)) == 1


def test_local_divisor_sum_equals_xi():
    for D0 in fundamental_discriminants(60):
        for f in range(1, 31):
            assert local_divisor_sum(D0, f) == xi_twisted(D0, f)


@pytest.mark.parametrize("D0, expected", [
    (1, Fraction(-1, 12)),
    (5, Fraction(-2, 5)),
    (8, Fraction(-1)),
    (12, Fraction(-2)),
    (13, Fraction(-2)),
    (-4, Fraction(0)),
    (-3, Fraction(0)),
])
def test_bernoulli_L_minus1(D0, expected):
    assert bernoulli_L_minus1(D0) == expected


def test_bernoulli_denominators_divide_60():
    for D0 in fundamental_discriminants(200):
        assert 60 % bernoulli_L_minus1(D0).denominator == 0


def test_bernoulli_rejects_non_fundamental():
    with pytest.raises(DiscriminantError):
        bernoulli_L_minus1(9)


@pytest.mark.parametrize("dK, expected", [(5, Fraction(1, 30)), (8, Fraction(1, 12)), (12, Fraction(1, 6)), (13, Fraction(1, 6))])
def test_dedekind_zeta_minus1(dK, expected):
    assert dedekind_zeta_minus1(dK) == expected


def test_L2_trivial_character(prec):
    assert L_chi_2(1, prec) == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
    assert L_chi_2(1, prec, method="hurwitz") == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
    assert L_chi_2(1, Precision(abs_tol=1e-10), method="direct") == pytest.approx(math.pi ** 2 / 6, abs=1e-9)


def test_L2_catalan(prec):
    catalan = float(mpmath.catalan)
    assert L_chi_2(-4, prec) == pytest.approx(catalan, abs=1e-12)
    assert L_chi_2(-4, Precision(abs_tol=1e-10), method="direct") == pytest.approx(catalan, abs=1e-9)


def test_L2_real_quadratic_value(prec):
    assert L_chi_2(5, prec) == pytest.approx(4 * math.pi ** 2 / (25 * math.sqrt(5)), abs=1e-12)


@pytest.mark.parametrize("D0", [1, 5, 8, 12, 13, 17, 21, 24])
def test_L2_functional_and_series_routes_agree(D0, prec):
    functional = L_chi_2(D0, prec, method="functional")
    assert L_chi_2(D0, prec, method="hurwitz") == pytest.approx(functional, abs=1e-12)
    assert L_chi_2(D0, Precision(abs_tol=1e-10), method="direct") == pytest.approx(functional, abs=1e-9)


def test_L2_direct_respects_term_cap():
    with pytest.raises(ConvergenceError):
        L_chi_2(5, Precision(abs_tol=1e-16, max_series_terms=1000), method="direct")


def test_L2_functional_route_needs_positive_discriminant(prec):
    with pytest.raises(DiscriminantError):
        L_chi_2(-4, prec, method="functional")
