"""
Points of the Siegel half-space H_2 and the quadratic space of signature (3,2).

q(x) = x3² - x1 x5 - x2 x4 and (x, y) = q(x+y) - q(x) - q(y), so (x, x) = 2 q(x).
A point z = (z1, z2, z3) spans the negative plane <Re u(z), Im u(z)> with
u(z) = (z2² - z1 z3, -z1, -z2, -z3, 1), and the majorant at z is
(x, x)_z = (x, x) + 2 R(x, z) with R(x, z) = |ψ(z, x)|² / (2 η²).
"""

from dataclasses import dataclass
import logging
from typing import NamedTuple

import numpy as np

from errors import DomainError, MajorantError

logger = logging.getLogger(__name__)

GRAM_Q = np.array([
    [0.0, 0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 2.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0, 0.0],
])


class AmbientVector(NamedTuple):
    x1: object
    x2: object
    x3: object
    x4: object
    x5: object

    @property
    def q(self):
        return q_form(self)


@dataclass(frozen=True)
class SiegelPoint:
    z1: complex
    z2: complex
    z3: complex

    def __post_init__(self):
        if not self.y1 > 0:
            raise DomainError(f"Im z1 must be positive, got {self.y1}")
        if not self.eta2 > 0:
            raise DomainError(f"y1 y3 - y2² must be positive, got {self.eta2}")

    @property
    def y1(self):
        return complex(self.z1).imag

    @property
    def y2(self):
        return complex(self.z2).imag

    @property
    def y3(self):
        return complex(self.z3).imag

    @property
    def eta2(self):
        return self.y1 * self.y3 - self.y2 ** 2

    @classmethod
    def from_matrix(cls, Z):
        Z = np.asarray(Z, dtype=complex)
        if Z.shape != (2, 2) or Z[0, 1] != Z[1, 0]:
            raise DomainError("a point of H_2 is a symmetric 2x2 matrix")
        return cls(complex(Z[0, 0]), complex(Z[0, 1]), complex(Z[1, 1]))

    def as_matrix(self):
        return np.array([[self.z1, self.z2], [self.z2, self.z3]], dtype=complex)


def q_form(x):
    return x[2] * x[2] - x[0] * x[4] - x[1] * x[3]


def bilinear(x, y):
    return 2 * x[2] * y[2] - x[0] * y[4] - x[4] * y[0] - x[1] * y[3] - x[3] * y[1]


def embed_u(z):
    z1, z2, z3 = complex(z.z1), complex(z.z2), complex(z.z3)
    return np.array([z2 * z2 - z1 * z3, -z1, -z2, -z3, 1.0 + 0.0j])


def psi(z, x):
    """ψ(z, x) = x1 - x2 z3 + 2 x3 z2 - x4 z1 + x5 (z2² - z1 z3); equals -(x, u(z))."""
    z1, z2, z3 = complex(z.z1), complex(z.z2), complex(z.z3)
    x1, x2, x3, x4, x5 = (float(t) for t in x)
    return x1 - x2 * z3 + 2.0 * x3 * z2 - x4 * z1 + x5 * (z2 * z2 - z1 * z3)


def majorant_R(z, x):
    return abs(psi(z, x)) ** 2 / (2.0 * z.eta2)


def majorant_form(z, x):
    """(x, x)_z = 2 q(x) + 2 R(x, z)."""
    return 2.0 * float(q_form(x)) + 2.0 * majorant_R(z, x)


def majorant_gram(z):
    """Gram matrix P_z with xᵀ P_z x = (x, x)_z, by polarization of majorant_form."""
    basis = np.eye(5)
    diagonal = [majorant_form(z, basis[i]) for i in range(5)]
    P = np.diag(diagonal)
    for i in range(5):
        for j in range(i + 1, 5):
            P[i, j] = P[j, i] = 0.5 * (majorant_form(z, basis[i] + basis[j]) - diagonal[i] - diagonal[j])
    try:
        np.linalg.cholesky(P)
    except np.linalg.LinAlgError as exc:
        raise MajorantError(f"majorant at {z} is not positive definite") from exc
    return P


def siegel_residual(P):
    """max |P Q^-1 P - Q|."""
    return float(np.max(np.abs(P @ np.linalg.solve(GRAM_Q, P) - GRAM_Q)))


def humbert_discriminant(x):
    """Δ(x) = (2 x3)² - 4 x1 x5 - 4 x2 x4 = 4 q(x)."""
    return (2 * x[2]) ** 2 - 4 * x[0] * x[4] - 4 * x[1] * x[3]


def in_divisor(z, x, tol=1e-12):
    return abs(psi(z, x)) <= tol


def random_point(rng, y_range=(0.5, 2.0), x_range=(-1.0, 1.0)):
    """A point of H_2 with y1, y3 uniform in y_range and |y2| < 0.9 sqrt(y1 y3)."""
    y1, y3 = rng.uniform(*y_range, size=2)
    y2 = 0.9 * np.sqrt(y1 * y3) * rng.uniform(-1.0, 1.0)
    x1, x2, x3 = rng.uniform(*x_range, size=3)
    return SiegelPoint(complex(x1, y1), complex(x2, y2), complex(x3, y3))
