"""Kink asymptotics of the vacuum-seed Darboux family."""

import logging
import math
from typing import List, Sequence

from core.interfaces.errors import ArgumentError, InsufficientDomainError
from core.models.action import ActionFamily
from core.models.results import KinkProfile
from modules.darboux.family import DarbouxFamily
from modules.numerics.scanning import linear_grid

logger = logging.getLogger(__name__)

PLATEAU_SAMPLES = 5
CROSSING_FRACTION = 0.9


def _crossing(points: List[float], values: List[float], level: float) -> float:
    """Linearly interpolated abscissa where the samples first reach a level."""
    for i in range(len(points) - 1):
        a, b = values[i] - level, values[i + 1] - level
        if a == 0.0:
            return points[i]
        if a * b < 0:
            t = a / (a - b)
            return points[i] + t * (points[i + 1] - points[i])
    if values[-1] == level:
        return points[-1]
    raise InsufficientDomainError(f"Samples never cross the level {level!r}")


def _plateau(values: Sequence[float], tolerance: float, side: str) -> float:
    spread = max(values) - min(values)
    if spread > tolerance:
        raise InsufficientDomainError(
            f"{side} plateau not resolved: outermost samples spread by {spread:.3e} "
            f"(> {tolerance:.3e}); widen the grid"
        )
    return math.fsum(values) / len(values)


def kink_profile(
    family: DarbouxFamily,
    grid: Sequence[float],
    plateau_tol: float = 1e-3
) -> KinkProfile:
    """Plateaus and transition width of f_gV across a wide grid.

    Plateaus are the means of the 5 outermost samples on each side; the width
    is the distance between the interpolated crossings of the levels lying 90%
    of the way from the midpoint to each plateau. A family member without a
    swing (lambda = 1/hbar, the constant fermionic branch) has width 0.

    Args:
        family: Vacuum-seed family with finite lambda
        grid: Strictly increasing samples spanning both asymptotic regions
        plateau_tol: Allowed plateau spread, in units of hbar

    Returns:
        KinkProfile

    Raises:
        ArgumentError: For a non-vacuum seed or lambda = +inf
        InsufficientDomainError: If the grid cannot resolve both plateaus
    """
    if family.seed.family is not ActionFamily.VACUUM or family.is_seed:
        raise ArgumentError(f"kink_profile needs a vacuum-seed family with finite lambda, got {family.name}")
    points = [float(x) for x in grid]
    if len(points) < 2 * PLATEAU_SAMPLES:
        raise InsufficientDomainError(
            f"kink_profile needs at least {2 * PLATEAU_SAMPLES} grid points, got {len(points)}"
        )

    values = [family.value(x) for x in points]
    tolerance = plateau_tol * family.hbar
    left = _plateau(values[:PLATEAU_SAMPLES], tolerance, "Left")
    right = _plateau(values[-PLATEAU_SAMPLES:], tolerance, "Right")

    swing = left - right
    if abs(swing) <= tolerance:
        logger.debug(f"{family.name} has no kink (plateaus {left:.6g}, {right:.6g})")
        return KinkProfile(left, right, 0.0)

    margin = 0.5 * (1.0 - CROSSING_FRACTION) * swing
    x_left = _crossing(points, values, left - margin)
    x_right = _crossing(points, values, right + margin)
    width = abs(x_right - x_left)

    logger.debug(f"{family.name} kink: {left:.6g} -> {right:.6g}, width {width:.6g}")
    return KinkProfile(left, right, width)


def analytic_kink_width(hbar: float) -> float:
    """Closed-form 90%-to-90% width 2 ln(19) / hbar of the vacuum kink for lambda > 1/hbar."""
    return 2.0 * math.log(19.0) / hbar


def kink_grid(hbar: float, half_width: float, count: int) -> List[float]:
    """Symmetric linear grid reaching |hbar x| = half_width."""
    if count < 2 * PLATEAU_SAMPLES:
        raise ArgumentError(f"kink grid needs at least {2 * PLATEAU_SAMPLES} points, got {count}")
    limit = half_width / hbar
    return linear_grid(-limit, limit, count)
