"""
Exact number theory behind the Eisenstein coefficients.

Kronecker characters, fundamental discriminants, the splitting 4m = D0 f^2
(resp. 16m = D0 f^2 on the second component), divisor sums, generalized
Bernoulli numbers and the L-values L(-1, chi) (exact) and L(2, chi) (numeric).

Everything exact is a fractions.Fraction.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging
import math

import numpy as np
from scipy.special import zeta as hurwitz_zeta
from sympy import divisor_sigma, divisors, factorint, jacobi_symbol, primefactors

from errors import CaseIndexError, ConvergenceError, DiscriminantError

logger = logging.getLogger(__name__)

ExactRational = Fraction

ZETA_MINUS1 = Fraction(-1, 12)
ZETA_MINUS3 = Fraction(1, 120)

DELTA = {0: 1, 1: 4}
# delta^(3/2), exact because delta is a square
DELTA_WEIGHT = {0: 1, 1: 8}


@dataclass(frozen=True)
class CaseIndex:
    """Component data of the lattice: gamma, m and the split D0·f^2 = 4·delta·m."""

    gamma: int
    m: Fraction
    delta_gamma: int
    D0: int
    f: int

    def __post_init__(self):
        if self.gamma not in DELTA:
            raise CaseIndexError(f"gamma must be 0 or 1, got {self.gamma}")
        if self.delta_gamma != DELTA[self.gamma]:
            raise CaseIndexError(f"delta_gamma must be {DELTA[self.gamma]} for gamma={self.gamma}")
        if self.f < 1:
            raise CaseIndexError(f"conductor must be positive, got {self.f}")
        if self.D0 * self.f ** 2 != 4 * self.delta_gamma * self.m:
            raise CaseIndexError(
                f"D0·f² = {self.D0 * self.f ** 2} does not equal {4 * self.delta_gamma}·m for m={self.m}"
            )
        if not is_fundamental(self.D0):
            raise DiscriminantError(f"D0={self.D0} is not a fundamental discriminant")

    @property
    def delta_weight(self):
        return DELTA_WEIGHT[self.gamma]

    @property
    def four_m(self):
        """The value q̂(u) = 4m of the lattice vectors in this component."""
        return int(4 * self.m)

    @property
    def sign(self):
        return 1 if self.m > 0 else -1

    def label(self):
        return f"gamma={self.gamma}, m={self.m}"


def as_rational(value):
    """Read an int, Fraction, float or string such as '5/4' as a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10 ** 6)
    return Fraction(value)


def is_squarefree(n):
    return all(exponent == 1 for exponent in factorint(abs(n)).values())


def is_fundamental(D):
    """D = 1, or D ≡ 1 mod 4 squarefree, or D = 4k with k ≡ 2,3 mod 4 squarefree."""
    if D == 1:
        return True
    if D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        k = D // 4
        return k % 4 in (2, 3) and is_squarefree(k)
    return False


def mobius(n):
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def kronecker_chi(D, n):
    """Kronecker symbol (D/n) for a discriminant D and n >= 1."""
    if D % 4 not in (0, 1):
        raise DiscriminantError(f"D={D} is not ≡ 0,1 mod 4")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _kronecker(D, n)


@lru_cache(maxsize=1 << 16)
def _kronecker(D, n):
    result = 1
    twos = (n & -n).bit_length() - 1
    if twos:
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5) and twos % 2:
            result = -1
        n >>= twos
    if n == 1:
        return result
    return result * int(jacobi_symbol(D % n, n))


def character_table(D):
    """chi_D(a) for a = 0 .. |D|-1 as an int array (period |D|)."""
    period = abs(D)
    table = np.zeros(period, dtype=np.int64)
    for a in range(1, period + 1):
        table[a % period] = kronecker_chi(D, a)
    return table


def split_discriminant(gamma, m):
    """Return the CaseIndex with D0 fundamental and D0·f^2 = 4m (gamma=0) or 16m (gamma=1)."""
    m = as_rational(m)
    if gamma not in DELTA:
        raise CaseIndexError(f"gamma must be 0 or 1, got {gamma}")
    if m == 0:
        raise CaseIndexError("m = 0 has no discriminant split")
    if gamma == 0 and m.denominator != 1:
        raise CaseIndexError(f"gamma=0 needs integral m, got {m}")
    if gamma == 1 and (m - Fraction(1, 4)).denominator != 1:
        raise CaseIndexError(f"gamma=1 needs m in Z + 1/4, got {m}")

    N = int(4 * DELTA[gamma] * m)
    sign = 1 if N > 0 else -1
    core, square_root = 1, 1
    for p, e in factorint(abs(N)).items():
        core *= p ** (e % 2)
        square_root *= p ** (e // 2)
    D = sign * core
    if D % 4 == 1:
        D0, f = D, square_root
    else:
        assert square_root % 2 == 0, f"{N} has no fundamental split"
        D0, f = 4 * D, square_root // 2
    return CaseIndex(gamma=gamma, m=m, delta_gamma=DELTA[gamma], D0=D0, f=f)


def sigma3(n):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return int(divisor_sigma(n, 3))


def xi_twisted(D0, f):
    """ξ(D0, f) = Σ_{d|f} μ(d) χ_D0(d) d σ3(f/d)."""
    return sum(mobius(d) * kronecker_chi(D0, d) * d * sigma3(f // d) for d in divisors(f))


def euler_factor(D0, n):
    """Π_{p|n} (1 - χ_D0(p) p^-2)."""
    factor = Fraction(1)
    for p in primefactors(n):
        factor *= 1 - Fraction(kronecker_chi(D0, p), p * p)
    return factor


def local_divisor_sum(D0, f):
    """Σ_{d|f} (f/d)^3 Π_{p|(f/d)} (1 - χ_D0(p) p^-2)."""
    return sum(Fraction((f // d) ** 3) * euler_factor(D0, f // d) for d in divisors(f))


def sigma_gamma_m(c):
    return local_divisor_sum(c.D0, c.f) / c.f ** 3


def bernoulli_L_minus1(D0):
    """L(-1, chi_D0) = -B_{2,chi}/2 with B_{2,chi} = (1/D) Σ_a χ(a)(a² - D a + D²/6).

    Odd characters (D0 < 0) give 0.
    """
    if not is_fundamental(D0):
        raise DiscriminantError(f"D0={D0} is not a fundamental discriminant")
    k = abs(D0)
    total = sum(kronecker_chi(D0, a) * (6 * a * a - 6 * k * a + k * k) for a in range(1, k + 1))
    b2 = Fraction(total, 6 * k)
    return -b2 / 2


def dedekind_zeta_minus1(dK):
    """ζ_K(-1) = ζ(-1)·L(-1, χ_dK) for the real quadratic field of discriminant dK."""
    if dK <= 1:
        raise DiscriminantError(f"dK={dK} is not a real quadratic discriminant")
    return ZETA_MINUS1 * bernoulli_L_minus1(dK)


def L_chi_2(D0, prec, method="auto"):
    """L(2, chi_D0).

    method:
      "functional"  -2π²·D0^(-3/2)·L(-1, chi), D0 > 0 only
      "hurwitz"     |D|^-2 Σ_a χ(a) ζ(2, a/|D|)
      "direct"      partial sums Σ_{n<=N} χ(n)/n² with a certified tail
      "auto"        functional for D0 > 0, hurwitz otherwise
    """
    if not is_fundamental(D0):
        raise DiscriminantError(f"D0={D0} is not a fundamental discriminant")
    if method == "auto":
        method = "functional" if D0 > 0 else "hurwitz"

    if method == "functional":
        if D0 < 0:
            raise DiscriminantError("the functional-equation route needs D0 > 0")
        return -2.0 * math.pi ** 2 * D0 ** -1.5 * float(bernoulli_L_minus1(D0))
    if method == "hurwitz":
        k = abs(D0)
        table = character_table(D0)
        residues = np.arange(1, k + 1)
        chi = table[residues % k]
        mask = chi != 0
        terms = chi[mask] * hurwitz_zeta(2.0, residues[mask] / k)
        return math.fsum(terms) / k ** 2
    if method == "direct":
        return _direct_L2(D0, prec)
    raise ValueError(f"unknown method {method!r}")


def _direct_L2(D0, prec):
    k = abs(D0)
    table = character_table(D0)
    trivial = k == 1
    if trivial:
        # Σ_{n>N} 1/n² lies in [1/(N+1), 1/N]; the midpoint is off by at most 1/(2N(N+1)).
        N = math.ceil(math.sqrt(1.0 / (2.0 * prec.abs_tol)))
    else:
        partial = np.cumsum(table[np.arange(1, k + 1) % k])
        max_partial = int(np.max(np.abs(partial)))
        N = math.ceil(math.sqrt(2.0 * max_partial / prec.abs_tol))
    if N > prec.max_series_terms:
        raise ConvergenceError(
            f"direct L(2, chi_{D0}) needs {N} terms for tolerance {prec.abs_tol:g}, "
            f"cap is {prec.max_series_terms}"
        )

    chunk = 1_000_000
    partial_sums = []
    for start in range(1, N + 1, chunk):
        n = np.arange(start, min(start + chunk, N + 1), dtype=np.float64)
        chi = table[np.arange(start, start + len(n)) % k]
        partial_sums.append(float(np.sum(chi / (n * n))))
    total = math.fsum(partial_sums)
    if trivial:
        total += 0.5 * (1.0 / N + 1.0 / (N + 1))
    logger.debug("direct L(2, chi_%d) with %d terms", D0, N)
    return total


def fundamental_discriminants(bound, positive=True, negative=True):
    """All fundamental discriminants D with 1 <= |D| <= bound, ordered by |D| then sign."""
    found = []
    for k in range(1, bound + 1):
        if positive and is_fundamental(k):
            found.append(k)
        if negative and is_fundamental(-k):
            found.append(-k)
    return found
