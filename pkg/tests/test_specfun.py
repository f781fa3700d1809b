import math

import numpy as np
import pytest
from scipy import integrate as scipy_integrate
from scipy.special import exp1, gamma

from errors import DomainError
from specfun import I3_minus, I3_plus, J_minus, J_plus, beta1, beta_s

REDUCTION_GRID = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]


def e1_series(x, terms=80):
    total = math.fsum((-1) ** (k + 1) * x ** k / (k * math.factorial(k)) for k in range(1, terms))
    return -np.euler_gamma - math.log(x) + total


def test_beta_s_closed_forms(prec):
    assert beta_s(0.0, 1.0, prec).value == pytest.approx(math.exp(-1.0), abs=1e-12)
    assert beta_s(1.0, 1.0, prec).value == pytest.approx(0.219383934395520, abs=1e-12)
    assert beta_s(2.0, 1.0, prec).value == pytest.approx(math.exp(-1.0) - exp1(1.0), abs=1e-12)


@pytest.mark.parametrize("x", [0.01, 0.5, 2.0, 5.0, 30.0])
def test_beta_one_is_exponential_integral(x, prec):
    assert beta_s(1.0, x, prec).value == pytest.approx(exp1(x), abs=1e-12)


def test_beta_one_logarithmic_singularity(prec):
    x = 1e-5
    assert beta_s(1.0, x, prec).value + math.log(x) == pytest.approx(-np.euler_gamma, abs=2e-5)


@pytest.mark.parametrize("x", [1e-3, 0.1, 1.0, 2.5, 5.0])
def test_beta1_series_oracle(x):
    assert float(beta1(x)) == pytest.approx(e1_series(x), abs=1e-10)


def test_beta_s_decreasing(prec):
    values = [beta_s(1.5, x, prec).value for x in (0.25, 0.5, 1.0, 2.0, 4.0)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_beta_s_domain(prec):
    with pytest.raises(DomainError):
        beta_s(1.0, 0.0, prec)
    with pytest.raises(DomainError):
        beta_s(-1.0, 1.0, prec)


def test_J_plus_linear_case(prec):
    assert J_plus(1.0, 1.0, prec).value == pytest.approx(1.0, abs=1e-12)
    assert J_plus(1.0, 2.0, prec).value == pytest.approx(0.5, abs=1e-12)


def test_J_plus_large_a_series(prec):
    a = 10.0
    binomial, series = 1.0, 0.0
    for k in range(1, 9):
        binomial *= (1.5 - k + 1) / k
        series += binomial * math.factorial(k - 1) / a ** k
    assert J_plus(1.5, a, prec).value == pytest.approx(series, abs=2e-7)


def test_J_plus_matches_scipy(prec):
    oracle, _ = scipy_integrate.quad(lambda w: math.exp(-2.0 * w) * ((1.0 + w) ** 1.5 - 1.0) / w, 0.0, np.inf, epsabs=1e-13)
    assert J_plus(1.5, 2.0, prec).value == pytest.approx(oracle, abs=1e-9)


def test_J_plus_decreasing(prec):
    values = [J_plus(1.5, a, prec).value for a in (0.5, 1.0, 2.0, 5.0, 10.0)]
    assert all(a > b > 0 for a, b in zip(values, values[1:]))


def test_J_minus_linear_case(prec):
    expected = 1.0 - math.e * exp1(1.0)
    assert J_minus(1.0, 1.0, prec).value == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(0.4036, abs=1e-4)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0, 5.0])
def test_J_minus_bound(a, prec):
    value = J_minus(1.5, a, prec).value
    assert 0.0 < value < gamma(2.5) / a ** 2.5


def test_J_minus_watson_limit(prec):
    a = 1e3
    assert a ** 2.5 * J_minus(1.5, a, prec).value == pytest.approx(gamma(2.5), rel=5e-3)


def test_J_minus_matches_scipy(prec):
    oracle, _ = scipy_integrate.quad(lambda w: math.exp(-2.0 * w) * w ** 1.5 / (1.0 + w), 0.0, np.inf, epsabs=1e-13)
    assert J_minus(1.5, 2.0, prec).value == pytest.approx(oracle, abs=1e-9)


def test_J_domain(prec):
    with pytest.raises(DomainError):
        J_plus(1.5, 0.0, prec)
    with pytest.raises(DomainError):
        J_minus(0.0, 1.0, prec)


@pytest.mark.parametrize("a", REDUCTION_GRID)
def test_I3_plus_reduces_to_J_plus(a, prec):
    v = a / (4.0 * math.pi)
    assert I3_plus(v, 1, prec).value == pytest.approx(J_plus(1.5, a, prec).value / 3.0, abs=1e-9)


@pytest.mark.parametrize("a", REDUCTION_GRID)
def test_I3_minus_reduces_to_J_minus(a, prec):
    v = a / (4.0 * math.pi)
    value = I3_minus(v, -1, prec).value
    J = J_minus(1.5, a, prec).value / 3.0
    assert value == pytest.approx(math.exp(-a) * J, abs=1e-9)
    assert value / (math.exp(a) * J) == pytest.approx(math.exp(-2.0 * a), rel=1e-3)


def test_I3_plus_double_integral_oracle(prec):
    a = 1.0
    inner = lambda r, t: math.exp(-a * math.sinh(t) ** 2 * r) * math.sinh(t) * math.cosh(t) ** 2 / r
    oracle, _ = scipy_integrate.dblquad(inner, 0.0, 4.0, 1.0, np.inf, epsabs=1e-10)
    assert I3_plus(1.0 / (4.0 * math.pi), 1, prec).value == pytest.approx(oracle, abs=1e-6)


def test_I3_minus_double_integral_oracle(prec):
    a = 1.0
    inner = lambda r, t: math.exp(-a * math.cosh(t) ** 2 * r) * math.sinh(t) ** 2 * math.cosh(t) / r
    oracle, _ = scipy_integrate.dblquad(inner, 0.0, 4.0, 1.0, np.inf, epsabs=1e-10)
    assert I3_minus(1.0 / (4.0 * math.pi), -1, prec).value == pytest.approx(oracle, abs=1e-6)


def test_I3_depends_on_a_only(prec):
    first = I3_plus(1.0 / (4.0 * math.pi), 1, prec).value
    second = I3_plus(1.0 / (8.0 * math.pi), 2, prec).value
    assert first == pytest.approx(second, abs=1e-12)


def test_I3_decays(prec):
    assert 0.0 < I3_plus(10.0, 1, prec).value < I3_plus(1.0, 1, prec).value < I3_plus(0.1, 1, prec).value
    assert 0.0 < I3_minus(10.0, -1, prec).value < 1e-20


def test_I3_domain(prec):
    with pytest.raises(DomainError):
        I3_plus(1.0, -1, prec)
    with pytest.raises(DomainError):
        I3_minus(1.0, 1, prec)
    with pytest.raises(DomainError):
        I3_plus(0.0, 1, prec)


def test_results_are_reproducible(prec):
    assert J_plus(1.5, 0.7, prec) == J_plus(1.5, 0.7, prec)
    assert I3_plus(0.3, 1, prec) == I3_plus(0.3, 1, prec)
