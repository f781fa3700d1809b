"""
Lattice vectors, enumeration under the majorant, and the two-component Green function.

Integer coordinates u ∈ Z⁵ stand for x = (u1, u2, u3/2, u4, u5) in the dual lattice L',
so q(x) = q̂(u)/4 with q̂(u) = u3² - 4 u2 u4 - 4 u1 u5. The component γ = 0 holds the
vectors with u3 even, γ = 1 those with u3 odd; L_{γ,m} = {u : q̂(u) = 4m}.

For every u: ½ xᵀ P_z x = q(x) + R(x, z), so the vectors of L_{γ,m} with R <= radius
are exactly those of majorant value <= m + radius.
"""

from dataclasses import dataclass
from fractions import Fraction
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.special import erfc

from arith import as_rational, split_discriminant
from errors import CaseIndexError, DomainError, EnumerationLimitError, SingularPointError
from siegel import AmbientVector, majorant_R, majorant_gram
from specfun import beta1

logger = logging.getLogger(__name__)

DEFAULT_MAX_POINTS = 500_000
SINGULAR_THRESHOLD = 1e-14
LLL_DELTA = 0.75

_SCALE = np.diag([1.0, 1.0, 0.5, 1.0, 1.0])


@dataclass(frozen=True)
class LatticeVector:
    coords: Tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.coords) != 5:
            raise ValueError(f"a lattice vector has 5 coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(t) for t in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __neg__(self):
        return LatticeVector(tuple(-t for t in self.coords))

    @property
    def qhat(self):
        u1, u2, u3, u4, u5 = self.coords
        return u3 * u3 - 4 * u2 * u4 - 4 * u1 * u5

    @property
    def primitive(self):
        return math.gcd(*self.coords) == 1

    @property
    def content(self):
        return math.gcd(*self.coords)

    @property
    def ambient(self):
        u1, u2, u3, u4, u5 = self.coords
        return AmbientVector(u1, u2, Fraction(u3, 2), u4, u5)


@dataclass(frozen=True)
class GreenEvaluation:
    value: float
    terms_used: int
    tail_bound: float
    radius: float
    nearest: float = math.inf

    @property
    def half_sum(self):
        """½ Σ over ±u pairs."""
        return 0.5 * self.value


def orbit_representative(gamma, m):
    """a_{0,m} = (1,0,0,0,-m); a_{1,m} = (0,1,1,-M,0) with 4m = 4M + 1."""
    m = as_rational(m)
    if gamma == 0:
        if m.denominator != 1:
            raise CaseIndexError(f"gamma=0 needs integral m, got {m}")
        return LatticeVector((1, 0, 0, 0, -int(m)))
    if gamma == 1:
        M = m - Fraction(1, 4)
        if M.denominator != 1:
            raise CaseIndexError(f"gamma=1 needs m in Z + 1/4, got {m}")
        return LatticeVector((0, 1, 1, -int(M), 0))
    raise CaseIndexError(f"gamma must be 0 or 1, got {gamma}")


def primitive_decomposition(c):
    """Pairs (n, CaseIndex of m/n²) with L_{γ,m} = ⊔ n·L*_{m/n²}.

    n runs over n² | 4m with 4m/n² ≡ 0, 1 mod 4; the component of m/n² is read off
    4m/n² mod 4 and can differ from γ.
    """
    four_m = c.four_m
    pieces = []
    n = 1
    while n * n <= abs(four_m):
        if four_m % (n * n) == 0 and (four_m // (n * n)) % 4 in (0, 1):
            reduced = four_m // (n * n)
            gamma = 0 if reduced % 4 == 0 else 1
            pieces.append((n, split_discriminant(gamma, Fraction(reduced, 4))))
        n += 1
    return pieces


def lattice_gram(z):
    """P̂_z = S P_z S on integer coordinates, S = diag(1, 1, ½, 1, 1)."""
    return _SCALE @ majorant_gram(z) @ _SCALE


def majorant_value(u, gram):
    """½ uᵀ P̂ u, summed in a fixed order."""
    total = 0.0
    for i in range(5):
        row = 0.0
        for j in range(5):
            row += gram[i][j] * u[j]
        total += u[i] * row
    return 0.5 * total


def _gram_schmidt(basis):
    n = basis.shape[1]
    star = np.zeros_like(basis)
    mu = np.zeros((n, n))
    norms = np.zeros(n)
    for i in range(n):
        star[:, i] = basis[:, i]
        for j in range(i):
            mu[i, j] = float(basis[:, i] @ star[:, j]) / norms[j]
            star[:, i] -= mu[i, j] * star[:, j]
        norms[i] = float(star[:, i] @ star[:, i])
    return mu, norms


def lll_transform(gram, delta=LLL_DELTA):
    """Unimodular T such that the basis with Gram matrix Tᵀ gram T is LLL reduced."""
    n = len(gram)
    basis = np.linalg.cholesky(gram).T.copy()
    T = np.eye(n, dtype=np.int64)
    k = 1
    while k < n:
        mu, norms = _gram_schmidt(basis)
        for j in range(k - 1, -1, -1):
            q = math.floor(mu[k, j] + 0.5)
            if q:
                basis[:, k] -= q * basis[:, j]
                T[:, k] -= q * T[:, j]
                mu, norms = _gram_schmidt(basis)
        if norms[k] >= (delta - mu[k, k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            basis[:, [k - 1, k]] = basis[:, [k, k - 1]]
            T[:, [k - 1, k]] = T[:, [k, k - 1]]
            k = max(k - 1, 1)
    return T


def _fincke_pohst(form, bound, slack):
    """Integer vectors c with cᵀ form c <= bound (plus slack), zero included."""
    n = len(form)
    R = np.linalg.cholesky(form).T
    diag = np.diag(R) ** 2
    offdiag = R / np.diag(R)[:, None]
    found = []
    coords = [0] * n

    def search(i, budget):
        center = -sum(offdiag[i, j] * coords[j] for j in range(i + 1, n))
        reach = math.sqrt(max(budget, 0.0) / diag[i]) + slack
        for x in range(math.ceil(center - reach), math.floor(center + reach) + 1):
            rest = budget - diag[i] * (x - center) ** 2
            if rest < -slack:
                continue
            coords[i] = x
            if i == 0:
                found.append(tuple(coords))
            else:
                search(i - 1, rest)
        coords[i] = 0

    search(n - 1, bound)
    return found


def enumerate_bounded(z, bound, prec, max_points=DEFAULT_MAX_POINTS, gram=None):
    """Nonzero u ∈ Z⁵ with ½ uᵀ P̂_z u <= bound, sorted lexicographically."""
    if not bound > 0:
        raise DomainError(f"bound must be positive, got {bound}")
    if gram is None:
        gram = lattice_gram(z)
    form = 0.5 * gram
    T = lll_transform(form)
    reduced = T.T @ form @ T
    slack = max(1e-9, prec.abs_tol) * (1.0 + bound)
    candidates = _fincke_pohst(reduced, bound, slack)
    if len(candidates) > max_points:
        raise EnumerationLimitError(
            f"{len(candidates)} lattice points under bound {bound:g} exceed the cap {max_points}"
        )
    vectors = set()
    for c in candidates:
        u = tuple(int(t) for t in T @ np.array(c, dtype=np.int64))
        if any(u) and majorant_value(u, gram) <= bound:
            vectors.add(u)
    logger.debug("enumerate_bounded: %d candidates, %d vectors under %g", len(candidates), len(vectors), bound)
    return [LatticeVector(u) for u in sorted(vectors)]


def green_term(u, z, v, singular_threshold=SINGULAR_THRESHOLD):
    """β1(2πv R(u, z)) for one lattice vector."""
    if not isinstance(u, LatticeVector):
        u = LatticeVector(tuple(u))
    R = majorant_R(z, u.ambient)
    if R < singular_threshold:
        raise SingularPointError(f"z lies on the divisor of {u.coords} (R = {R:.3e})", vector=u, distance=R)
    return float(beta1(2.0 * math.pi * v * R))


def green_function(c, v, z, radius, prec, max_points=DEFAULT_MAX_POINTS, singular_threshold=SINGULAR_THRESHOLD):
    """Ξ(γ, m, v, z) truncated to the vectors of L_{γ,m} with R(u, z) <= radius."""
    if not v > 0:
        raise DomainError(f"v must be positive, got {v}")
    if not radius > 0:
        raise DomainError(f"radius must be positive, got {radius}")

    bound = float(c.m) + radius
    vectors = enumerate_bounded(z, bound, prec, max_points) if bound > 0 else []
    terms = []
    nearest = math.inf
    for u in vectors:
        if u.qhat != c.four_m or u[2] % 2 != c.gamma:
            continue
        R = majorant_R(z, u.ambient)
        if R > radius:
            continue
        if R < singular_threshold:
            raise SingularPointError(
                f"z lies on the Heegner divisor of {u.coords} (R = {R:.3e})", vector=u, distance=R
            )
        nearest = min(nearest, R)
        terms.append(float(beta1(2.0 * math.pi * v * R)))

    if terms:
        density = len(terms) / radius ** 1.5
    else:
        density = 1.0
        logger.warning("green_function: no vector of %s has R <= %g; value is 0", c.label(), radius)
    k = 2.0 * math.pi * v
    tail = 3.0 * density / (4.0 * math.pi * v) * math.sqrt(math.pi / k) * float(erfc(math.sqrt(k * radius)))
    if tail > prec.abs_tol:
        logger.warning("green_function: tail bound %.3e exceeds tolerance %.1e", tail, prec.abs_tol)
    return GreenEvaluation(
        value=math.fsum(terms),
        terms_used=len(terms),
        tail_bound=tail,
        radius=radius,
        nearest=nearest,
    )
