"""Adaptive quadrature with finiteness checks on every integrand sample."""

import logging
import math
from typing import Callable

from scipy import integrate

from core.interfaces.errors import ArgumentError, DomainError
from core.models.results import QuadratureResult

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
DEFAULT_LIMIT = 200


def integrate_adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOLERANCE,
    rel_tol: float = 0.0,
    limit: int = DEFAULT_LIMIT
) -> QuadratureResult:
    """Integrate f over [a, b] by adaptive Gauss-Kronrod bisection.

    QUADPACK (through scipy) bisects the worst subinterval until the embedded
    Gauss/Kronrod error estimate meets the tolerance. Reversed orientation is
    handled as a sign flip, so the signed integral from 0 to a negative x is
    well defined.

    Args:
        f: Real-valued integrand
        a: Lower limit
        b: Upper limit
        tol: Absolute tolerance (> 0)
        rel_tol: Relative tolerance (>= 0), useful for rapidly growing integrands
        limit: Maximum number of subintervals

    Returns:
        QuadratureResult with value, error bound and evaluation count

    Raises:
        ArgumentError: If tol <= 0 or a limit is not finite
        DomainError: If the integrand is not finite at some abscissa
    """
    if not tol > 0:
        raise ArgumentError(f"Quadrature tolerance must be positive, got {tol!r}")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ArgumentError(f"Quadrature limits must be finite, got [{a!r}, {b!r}]")

    if a > b:
        flipped = integrate_adaptive(f, b, a, tol, rel_tol, limit)
        return QuadratureResult(-flipped.value, flipped.error_bound, flipped.evaluations)

    evaluations = 0

    def checked(y: float) -> float:
        nonlocal evaluations
        evaluations += 1
        value = f(y)
        if not math.isfinite(value):
            raise DomainError(f"Integrand is not finite at y = {y!r}: {value!r}", x=y)
        return value

    if a == b:
        checked(a)
        return QuadratureResult(0.0, 0.0, evaluations)

    result = integrate.quad(
        checked, a, b,
        epsabs=tol, epsrel=rel_tol, limit=limit, full_output=1
    )
    value, error_bound = float(result[0]), float(result[1])
    if len(result) > 3:
        # ier > 0: scipy reports the reason instead of warning when full_output is set
        logger.warning(
            f"Quadrature on [{a}, {b}] stopped early "
            f"(error bound {error_bound:.3e}): {result[3]}"
        )

    return QuadratureResult(value, abs(error_bound), evaluations)
