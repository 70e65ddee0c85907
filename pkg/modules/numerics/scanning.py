"""Sign-change scanning and sample grids."""

import logging
import math
from typing import Callable, List, Sequence, Tuple

import numpy as np

from core.interfaces.errors import ArgumentError, DomainError

logger = logging.getLogger(__name__)


def scan_sign_change(
    f: Callable[[float], float],
    grid: Sequence[float]
) -> List[Tuple[float, float]]:
    """Find grid intervals where f changes sign or touches zero.

    Args:
        f: Real-valued function
        grid: Strictly increasing samples (at least 2)

    Returns:
        Every adjacent pair (x_i, x_{i+1}) with f(x_i) * f(x_{i+1}) <= 0;
        an empty list means no singularity was detected on the grid

    Raises:
        ArgumentError: If the grid is too short or not strictly increasing
        DomainError: If f is not finite at a grid point
    """
    points = np.asarray(grid, dtype=float)
    if points.ndim != 1 or points.size < 2:
        raise ArgumentError("Sign scan needs at least 2 grid points")
    if np.any(np.diff(points) <= 0):
        raise ArgumentError("Sign scan grid must be strictly increasing")

    values = np.empty_like(points)
    for i, y in enumerate(points):
        value = f(float(y))
        if not math.isfinite(value):
            raise DomainError(f"Function is not finite at grid point {float(y)!r}", x=float(y))
        values[i] = value

    signs = np.sign(values)
    hits = np.nonzero(signs[:-1] * signs[1:] <= 0)[0]
    brackets = [(float(points[i]), float(points[i + 1])) for i in hits]
    if brackets:
        logger.debug(f"Sign scan found {len(brackets)} bracket(s): {brackets}")
    return brackets


def linear_grid(start: float, stop: float, count: int) -> List[float]:
    """Linearly spaced grid including both end points."""
    if count < 2:
        raise ArgumentError(f"Grid count must be >= 2, got {count}")
    return [float(p) for p in np.linspace(start, stop, count)]


def log_grid(start: float, stop: float, count: int) -> List[float]:
    """Log-spaced grid on [start, stop] with start > 0."""
    if count < 2:
        raise ArgumentError(f"Grid count must be >= 2, got {count}")
    if not (start > 0 and stop > start):
        raise ArgumentError(f"Log grid needs 0 < start < stop, got [{start}, {stop}]")
    return [float(p) for p in np.logspace(math.log10(start), math.log10(stop), count)]
