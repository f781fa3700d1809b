"""
Special functions of the Green-function integrals.

    beta_s(x)   = ∫_1^∞ e^{-xt} t^{-s} dt          (beta_1 = E1)
    J_+(s, a)   = ∫_0^∞ e^{-aw} ((1+w)^s - 1) dw/w
    J_-(s, a)   = ∫_0^∞ e^{-aw} w^s dw/(1+w)
    I3_+(v, m)  = ∫_0^∞ ∫_1^∞ e^{-a sinh²(t) r} sinh(t) cosh²(t) dr/r dt,  a = 4πmv
    I3_-(v, m)  = ∫_0^∞ ∫_1^∞ e^{-|a| cosh²(t) r} sinh²(t) cosh(t) dr/r dt

Every integral runs on quadrature.integrate over a finite range; the part beyond
the cut is bounded analytically and the bound is added to err_estimate.
The r-integrals of I3± are E1 in closed form, leaving one integral in s = sinh t.
"""

import logging
import math

import numpy as np
from scipy.special import erfc, exp1, gamma, gammaincc

from errors import DomainError
from quadrature import QuadratureResult, geometric_breakpoints, integrate

logger = logging.getLogger(__name__)


def _require_positive(name, value):
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value}")


def beta1(x):
    """E1(x), vectorized."""
    return exp1(x)


def beta_s(s, x, prec):
    """β_s(x) for s >= 0 and x > 0.

    With t = 1 + u/x the integral is (e^{-x}/x) ∫_0^∞ e^{-u} (1 + u/x)^{-s} du.
    """
    if s < 0:
        raise DomainError(f"s must be nonnegative, got {s}")
    _require_positive("x", x)

    scale = math.exp(-x) / x
    if scale == 0.0:
        return QuadratureResult(0.0, 0.0, 0)
    cut = prec.tail_cut

    def integrand(u):
        return np.exp(-u - s * np.log1p(u / x))

    breakpoints = geometric_breakpoints(0.0, cut) + [x * 10.0 ** j for j in range(-3, 4)]
    inner = integrate(integrand, 0.0, cut, prec.with_tolerance(prec.abs_tol / max(scale, 1.0)), breakpoints)
    tail = scale * math.exp(-cut)
    return inner.scaled(scale).with_tail(tail)


def J_plus(s, a, prec):
    _require_positive("s", s)
    _require_positive("a", a)
    width = prec.tail_cut / a

    def integrand(w):
        w = np.asarray(w, dtype=float)
        safe = np.where(w == 0.0, 1.0, w)
        values = np.exp(-a * w) * np.expm1(s * np.log1p(w)) / safe
        return np.where(w == 0.0, s, values)

    breakpoints = geometric_breakpoints(0.0, width) + [1.0]
    result = integrate(integrand, 0.0, width, prec, breakpoints)
    # (1+w)^s <= (1 + 1/W)^s w^s beyond W
    tail = (1.0 + 1.0 / width) ** s * a ** -s * gamma(s) * gammaincc(s, prec.tail_cut)
    logger.debug("J+(%g, %g) = %.15g (%d evaluations)", s, a, result.value, result.evaluations)
    return result.with_tail(float(tail))


def J_minus(s, a, prec):
    """J_-(s, a), integrated in t = sqrt(w) so the integrand 2 e^{-at²} t^{2s+1}/(1+t²) is smooth at 0."""
    _require_positive("s", s)
    _require_positive("a", a)
    upper = math.sqrt(prec.tail_cut / a)

    def integrand(t):
        t2 = t * t
        return 2.0 * np.exp(-a * t2) * t ** (2.0 * s + 1.0) / (1.0 + t2)

    result = integrate(integrand, 0.0, upper, prec, geometric_breakpoints(0.0, upper, levels=4))
    tail = a ** -s * gamma(s) * gammaincc(s, prec.tail_cut)
    logger.debug("J-(%g, %g) = %.15g (%d evaluations)", s, a, result.value, result.evaluations)
    return result.with_tail(float(tail))


def I3_plus(v, m, prec):
    """I3_+(v, m) = ∫_0^∞ E1(a s²) s sqrt(1+s²) ds with s = sinh t."""
    _require_positive("v", v)
    if not m > 0:
        raise DomainError(f"I3_plus needs m > 0, got {m}")
    a = 4.0 * math.pi * float(m) * v
    upper = math.sqrt(prec.tail_cut / a)

    def integrand(s):
        return exp1(a * s * s) * s * np.sqrt(1.0 + s * s)

    result = integrate(integrand, 0.0, upper, prec, geometric_breakpoints(0.0, upper, levels=16))
    # E1(y) <= e^{-y}/y and sqrt(1+s²)/s <= sqrt(1 + 1/S²) beyond S
    tail = 0.5 * math.sqrt(1.0 + a / prec.tail_cut) * math.sqrt(math.pi) * erfc(math.sqrt(prec.tail_cut)) / a ** 1.5
    return result.with_tail(float(tail))


def I3_minus(v, m, prec):
    """I3_-(v, m) = ∫_0^∞ E1(|a|(1+s²)) s² ds with s = sinh t."""
    _require_positive("v", v)
    if not m < 0:
        raise DomainError(f"I3_minus needs m < 0, got {m}")
    a = 4.0 * math.pi * abs(float(m)) * v
    upper = math.sqrt(prec.tail_cut / a)

    def integrand(s):
        return exp1(a * (1.0 + s * s)) * s * s

    result = integrate(integrand, 0.0, upper, prec, geometric_breakpoints(0.0, upper, levels=4))
    tail = math.exp(-a) / a * 0.5 * math.sqrt(math.pi / a) * erfc(math.sqrt(prec.tail_cut))
    return result.with_tail(float(tail))
