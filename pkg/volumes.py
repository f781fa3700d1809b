"""
Covolumes of the stabilizer groups, in the normalization each formula is stated in.

    H_plus   dx dy dr / r³ on hyperbolic 3-space
    H2_unit  dx1 dy1 dx2 dy2 / (y1 y2)² on H × H
    H2_HG    the same form divided by (2π)²
    Siegel   the Siegel normalization used for the integrals
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
import logging
import math
from typing import Optional

from arith import (
    ZETA_MINUS1,
    ZETA_MINUS3,
    L_chi_2,
    bernoulli_L_minus1,
    dedekind_zeta_minus1,
    euler_factor,
    is_fundamental,
)
from errors import CaseIndexError, DiscriminantError

logger = logging.getLogger(__name__)

VOL_SO2 = 2.0 * math.pi
VOL_SO3 = 8.0 * math.pi ** 2
VOL_SO3_SO2 = 4.0 * math.pi
HG_TO_H2 = (2.0 * math.pi) ** 2

SIGNED_B = ZETA_MINUS1 * ZETA_MINUS3


class Convention(Enum):
    H_PLUS = "H_plus"
    H2_UNIT = "H2_unit"
    H2_HG = "H2_HG"
    SIEGEL = "Siegel"


class Space(Enum):
    D22 = "D22"
    D13 = "D13"


@dataclass(frozen=True)
class VolumeValue:
    """value = float(exact_part) · π^pi_power whenever exact_part is set."""

    value: float
    convention: Convention
    exact_part: Optional[Fraction] = None
    pi_power: int = 0
    alternate: Optional[float] = None

    def exact_value(self):
        if self.exact_part is None:
            return None
        return float(self.exact_part) * math.pi ** self.pi_power


def _require_fundamental(dK, sign):
    if sign * dK <= 0 or dK == 1 or not is_fundamental(dK):
        kind = "real" if sign > 0 else "imaginary"
        raise DiscriminantError(f"dK={dK} is not a fundamental {kind} quadratic discriminant")


def humbert_V13(dK, prec):
    """|dK|^{3/2} L(2, χ_dK)/24; the ζ_K(2) form is returned as alternate."""
    _require_fundamental(dK, -1)
    L2 = L_chi_2(dK, prec)
    value = abs(dK) ** 1.5 * L2 / 24.0
    zeta_K2 = math.pi ** 2 / 6.0 * L2
    return VolumeValue(
        value=value,
        convention=Convention.H_PLUS,
        alternate=abs(dK) ** 1.5 * zeta_K2 / (4.0 * math.pi ** 2),
    )


def hirzebruch_vol(dK, f, prec):
    """f³ Π_{p|f}(1 - χ(p)/p²) |dK|^{3/2} L(2, χ)/(12π²) = 2 f³ Π_{p|f}(...) ζ_K(-1)."""
    _require_fundamental(dK, 1)
    if f < 1:
        raise ValueError(f"conductor must be positive, got {f}")
    local = f ** 3 * euler_factor(dK, f)
    value = float(local) * dK ** 1.5 * L_chi_2(dK, prec, method="hurwitz") / (12.0 * math.pi ** 2)
    exact = 2 * local * dedekind_zeta_minus1(dK)
    return VolumeValue(value=value, convention=Convention.H2_HG, exact_part=exact, pi_power=0)


def V22(dK, prec):
    """|dK|^{3/2} L(2, χ)/3 = 8π² ζ_K(-1)."""
    _require_fundamental(dK, 1)
    value = dK ** 1.5 * L_chi_2(dK, prec, method="hurwitz") / 3.0
    exact = 8 * dedekind_zeta_minus1(dK)
    return VolumeValue(
        value=value,
        convention=Convention.H2_UNIT,
        exact_part=exact,
        pi_power=2,
        alternate=float(exact) * math.pi ** 2,
    )


def siegel_volume(D0, f, space, prec):
    """(1/12 or 1/24) |D0|^{3/2} L(2, χ_D0) f³ Π_{p|f}(1 - χ(p)/p²)."""
    space = Space(space)
    if space is Space.D22 and D0 < 0 or space is Space.D13 and D0 > 0:
        raise CaseIndexError(f"D0={D0} does not belong to {space.value}")
    local = f ** 3 * euler_factor(D0, f)
    prefactor = Fraction(1, 12) if space is Space.D22 else Fraction(1, 24)
    value = float(prefactor * local) * abs(D0) ** 1.5 * L_chi_2(D0, prec)
    exact = None
    pi_power = 0
    if D0 > 0:
        # D0^{3/2} L(2, χ) = -2π² L(-1, χ)
        exact = -2 * prefactor * local * bernoulli_L_minus1(D0)
        pi_power = 2
    return VolumeValue(value=value, convention=Convention.SIEGEL, exact_part=exact, pi_power=pi_power)


def vol_sie(c, space, prec):
    space = Space(space)
    if (space is Space.D22) != (c.m > 0):
        raise CaseIndexError(f"{space.value} does not match the sign of m in {c.label()}")
    return siegel_volume(c.D0, c.f, space, prec)


def constant_B():
    """B = 2^-5 3^-2 5^-1 as displayed (positive)."""
    return abs(SIGNED_B)


def functional_equation_residual(dK, prec):
    """ζ_K(-1) - ζ_K(2) dK^{3/2}/(4π⁴) with ζ_K(2) = ζ(2) L(2, χ) from the series route."""
    _require_fundamental(dK, 1)
    zeta_K2 = math.pi ** 2 / 6.0 * L_chi_2(dK, prec, method="hurwitz")
    residual = float(dedekind_zeta_minus1(dK)) - zeta_K2 * dK ** 1.5 / (4.0 * math.pi ** 4)
    logger.debug("functional equation residual for dK=%d: %.3e", dK, residual)
    return residual
