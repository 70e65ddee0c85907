"""Central finite differences."""

import math
from typing import Callable, Optional

import numpy as np

from core.interfaces.errors import ArgumentError, DomainError

_CBRT_EPS = float(np.cbrt(np.finfo(float).eps))


def default_step(x: float) -> float:
    """Standard truncation/round-off step cbrt(eps) * max(1, |x|)."""
    return _CBRT_EPS * max(1.0, abs(x))


def _sample(f: Callable[[float], float], y: float) -> float:
    value = f(y)
    if not math.isfinite(value):
        raise DomainError(f"Function is not finite at y = {y!r}: {value!r}", x=y)
    return value


def _check_step(h: float) -> None:
    if not h > 0:
        raise ArgumentError(f"Finite-difference step must be positive, got {h!r}")


def derivative_central(f: Callable[[float], float], x: float, h: Optional[float] = None) -> float:
    """First derivative by the symmetric difference (f(x+h) - f(x-h)) / (2h).

    Args:
        f: Real-valued function
        x: Evaluation point
        h: Step (default cbrt(eps) * max(1, |x|))

    Returns:
        O(h^2)-accurate derivative estimate

    Raises:
        ArgumentError: If h <= 0
        DomainError: If f is not finite at x +- h
    """
    if h is None:
        h = default_step(x)
    _check_step(h)
    return (_sample(f, x + h) - _sample(f, x - h)) / (2.0 * h)


def derivative_richardson(f: Callable[[float], float], x: float, h: Optional[float] = None) -> float:
    """First derivative with one Richardson extrapolation step, O(h^4).

    Args:
        f: Real-valued function
        x: Evaluation point
        h: Coarse step (default 1e-3 * max(1, |x|))

    Returns:
        (4 D(h/2) - D(h)) / 3 where D is the central difference
    """
    if h is None:
        h = 1e-3 * max(1.0, abs(x))
    coarse = derivative_central(f, x, h)
    fine = derivative_central(f, x, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def second_derivative_central(
    f: Callable[[float], float],
    x: float,
    h: Optional[float] = None,
    richardson: bool = True
) -> float:
    """Second derivative by the three-point stencil, optionally Richardson-extrapolated.

    Args:
        f: Real-valued function
        x: Evaluation point
        h: Step (default 1e-3 * max(1, |x|))
        richardson: Combine steps h and h/2 to cancel the O(h^2) term

    Returns:
        Second-derivative estimate
    """
    if h is None:
        h = 1e-3 * max(1.0, abs(x))
    _check_step(h)
    center = _sample(f, x)

    def stencil(step: float) -> float:
        return (_sample(f, x + step) - 2.0 * center + _sample(f, x - step)) / (step * step)

    coarse = stencil(h)
    if not richardson:
        return coarse
    fine = stencil(0.5 * h)
    return (4.0 * fine - coarse) / 3.0
