"""
Adaptive Gauss-Kronrod quadrature.

Each panel is integrated with the 15-point Kronrod rule; the embedded 7-point
Gauss rule gives the error estimate (QUADPACK's qk15 heuristic). The panel with
the largest estimate is bisected until the summed estimate drops below the
requested absolute tolerance.

Runs are deterministic: ties between panels are broken by their left endpoint
and the final sum is taken over panels in left-to-right order with math.fsum.
"""

from dataclasses import dataclass
import heapq
import logging
import math

import numpy as np

from errors import ConvergenceError

logger = logging.getLogger(__name__)


# Kronrod abscissae on [0, 1], outermost first; odd positions are Gauss nodes.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])

_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])

_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_HALF_WG = np.array([0.0, _WG[0], 0.0, _WG[1], 0.0, _WG[2], 0.0])

NODES = np.concatenate((-_XGK[:7], [0.0], _XGK[6::-1]))
KRONROD_WEIGHTS = np.concatenate((_WGK[:7], [_WGK[7]], _WGK[6::-1]))
GAUSS_WEIGHTS = np.concatenate((_HALF_WG, [_WG[3]], _HALF_WG[::-1]))

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Precision:
    """Tolerance contract shared by every numerical routine.

    abs_tol           absolute error target for one integral or series
    max_subdivisions  cap on the number of panels of an adaptive run
    tail_cut          number of e-folds of exponential decay integrated before the
                      remaining tail is bounded analytically
    max_series_terms  cap on the partial sums of a direct series
    """

    abs_tol: float = 1e-12
    max_subdivisions: int = 2000
    tail_cut: float = 40.0
    max_series_terms: int = 10_000_000

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be positive, got {self.max_subdivisions}")
        if not self.tail_cut > 0:
            raise ValueError(f"tail_cut must be positive, got {self.tail_cut}")
        if self.max_series_terms < 1:
            raise ValueError(f"max_series_terms must be positive, got {self.max_series_terms}")

    def with_tolerance(self, abs_tol):
        return Precision(abs_tol, self.max_subdivisions, self.tail_cut, self.max_series_terms)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_estimate: float
    evaluations: int

    def __add__(self, other):
        return QuadratureResult(
            self.value + other.value,
            self.err_estimate + other.err_estimate,
            self.evaluations + other.evaluations,
        )

    def scaled(self, factor):
        return QuadratureResult(self.value * factor, self.err_estimate * abs(factor), self.evaluations)

    def with_tail(self, tail_bound):
        return QuadratureResult(self.value, self.err_estimate + tail_bound, self.evaluations)


def kronrod_panel(f, a, b):
    """Integrate f over [a, b] with the 15-point Kronrod rule.

    Returns (value, error estimate). f must accept a numpy array of nodes.
    """
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    values = np.asarray(f(center + half * NODES), dtype=float)

    res_k = float(np.dot(KRONROD_WEIGHTS, values))
    res_g = float(np.dot(GAUSS_WEIGHTS, values))
    res_abs = float(np.dot(KRONROD_WEIGHTS, np.abs(values)))
    res_asc = float(np.dot(KRONROD_WEIGHTS, np.abs(values - 0.5 * res_k)))

    err = abs(res_k - res_g) * half
    res_asc *= half
    if res_asc != 0.0 and err != 0.0:
        err = res_asc * min(1.0, (200.0 * err / res_asc) ** 1.5)
    err = max(err, _EPS * res_abs * half)
    return res_k * half, err


def integrate(f, lower, upper, prec, breakpoints=()):
    """Adaptive integral of f over the finite interval [lower, upper].

    breakpoints seed the initial panels; points outside (lower, upper) are ignored.
    Raises ConvergenceError when the panel budget is exhausted.
    """
    if not upper > lower:
        raise ValueError(f"empty interval [{lower}, {upper}]")

    edges = sorted({float(lower), float(upper), *(float(p) for p in breakpoints if lower < p < upper)})
    heap = []
    for a, b in zip(edges[:-1], edges[1:]):
        value, err = kronrod_panel(f, a, b)
        heapq.heappush(heap, (-err, a, b, value))
    evaluations = 15 * len(heap)

    while True:
        total_err = math.fsum(-item[0] for item in heap)
        if total_err <= prec.abs_tol:
            break
        if len(heap) >= prec.max_subdivisions:
            raise ConvergenceError(
                f"quadrature on [{lower}, {upper}] stopped at error {total_err:.3e} "
                f"> {prec.abs_tol:.3e} after {len(heap)} panels"
            )
        _, a, b, _ = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not a < mid < b:
            raise ConvergenceError(f"panel [{a}, {b}] cannot be bisected further")
        for left, right in ((a, mid), (mid, b)):
            value, err = kronrod_panel(f, left, right)
            heapq.heappush(heap, (-err, left, right, value))
        evaluations += 30

    panels = sorted(heap, key=lambda item: item[1])
    result = QuadratureResult(
        value=math.fsum(item[3] for item in panels),
        err_estimate=total_err,
        evaluations=evaluations,
    )
    logger.debug("integrate [%g, %g]: %d panels, err %.2e", lower, upper, len(panels), total_err)
    return result


def geometric_breakpoints(lower, upper, levels=12):
    """Panels refined geometrically towards lower: lower + (upper-lower)·2^-k."""
    width = upper - lower
    return [lower + width * 2.0 ** -k for k in range(1, levels + 1)]
