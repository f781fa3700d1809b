"""
Fourier coefficients of the weight 5/2 Eisenstein series attached to the (3,2) lattice.

    C(γ,m,0)      = -960 π^-2 |m|^{3/2} L(2, χ_D0) σ_{γ,m}
    c0(γ,m,0,v)   = C e^{-a/2} for m > 0, 0 for m < 0          (a = 4πmv)
    c0'(γ,m,0,v)  = C e^{-a/2} (J_+(3/2, a) + κ)                  m > 0
                  = C e^{-|a|/2} J_-(3/2, |a|)                    m < 0

κ = C'(γ,m,0)/C(γ,m,0) is supplied by the caller. Cohen's H(2, 4m) gives an
independent exact route: for D0 > 0 the π² cancels and C = 240 H(2,4m)/δ^{3/2}.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import math
from typing import Optional

from arith import ZETA_MINUS3, L_chi_2, bernoulli_L_minus1, sigma_gamma_m, xi_twisted
from errors import CaseIndexError, DomainError
from specfun import J_minus, J_plus

logger = logging.getLogger(__name__)

COHEN_H_ZERO = ZETA_MINUS3
KUDLA_CONSTANT_TERM = 1


@dataclass(frozen=True)
class CohenNumber:
    value: Fraction
    m4: int


@dataclass(frozen=True)
class EisensteinValue:
    C: float
    c0: float
    a: float
    kappa: Optional[float] = None

    def __post_init__(self):
        if self.a < 0 and self.c0 != 0.0:
            raise ValueError("c0 must vanish for m < 0")


def _require_positive_index(c, what):
    if c.m <= 0:
        raise CaseIndexError(f"{what} needs m > 0, got {c.label()}")


def cohen_H(c):
    """H(2, 4m) = L(-1, χ_D0) ξ(D0, f)."""
    _require_positive_index(c, "cohen_H")
    value = bernoulli_L_minus1(c.D0) * xi_twisted(c.D0, c.f)
    return CohenNumber(value=value, m4=c.four_m)


def coefficient_C(c, prec, method="auto"):
    L2 = L_chi_2(c.D0, prec, method=method)
    sigma = sigma_gamma_m(c)
    logger.debug("C(%s): D0=%d f=%d L(2)=%.15g sigma=%s", c.label(), c.D0, c.f, L2, sigma)
    return -960.0 / math.pi ** 2 * abs(float(c.m)) ** 1.5 * L2 * float(sigma)


def coefficient_C_exact(c):
    """C(γ,m,0) as an exact rational when D0 > 0, else None."""
    if c.D0 < 0:
        return None
    return 240 * cohen_H(c).value / c.delta_weight


def a_parameter(c, v):
    return 4.0 * math.pi * float(c.m) * v


def coefficient_c0(c, v, prec):
    if not v > 0:
        raise DomainError(f"v must be positive, got {v}")
    if c.m < 0:
        return 0.0
    return coefficient_C(c, prec) * math.exp(-a_parameter(c, v) / 2.0)


def coefficient_c0_prime(c, v, kappa, prec):
    if not v > 0:
        raise DomainError(f"v must be positive, got {v}")
    C = coefficient_C(c, prec)
    a = a_parameter(c, v)
    if c.m > 0:
        return C * math.exp(-a / 2.0) * (J_plus(1.5, a, prec).value + kappa)
    return C * math.exp(-abs(a) / 2.0) * J_minus(1.5, abs(a), prec).value


def kudla_A(c):
    """A(m) = 2³·3·5·H(2, 4m)."""
    return 120 * cohen_H(c).value


def eisenstein_value(c, v, prec, kappa=None):
    C = coefficient_C(c, prec)
    a = a_parameter(c, v)
    c0 = C * math.exp(-a / 2.0) if c.m > 0 else 0.0
    return EisensteinValue(C=C, c0=c0, a=a, kappa=kappa)
