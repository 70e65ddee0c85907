"""Riccati-type residuals and the supersymmetric partner potential.

An action f solves the bosonic equation f' + f^2 = V1 when f = w'/w for a
zero mode w'' = V1 w; the fermionic partner -f' + f^2 = V2 shares the same
f with the reciprocal zero mode.
"""

import logging
from typing import Callable, List, Sequence, Union

from core.interfaces.action import IActionEvaluator
from core.interfaces.errors import ArgumentError
from core.models.results import ResidualKind, RiccatiResidualReport

logger = logging.getLogger(__name__)

Potential = Union[float, Callable[[float], float]]


def _potential_at(V: Potential, x: float) -> float:
    return V(x) if callable(V) else float(V)


def bosonic_residual(f: IActionEvaluator, x: float, V1: Potential) -> float:
    """Residual f'(x) + f(x)^2 - V1(x) of the bosonic Riccati equation.

    Args:
        f: Action evaluator
        x: Evaluation point
        V1: Potential, either a constant or a function of x

    Returns:
        Residual (zero iff f solves the equation at x)

    Raises:
        SingularityError: If f is singular at x
    """
    value = f.value(x)
    return f.derivative(x) + value * value - _potential_at(V1, x)


def fermionic_residual(f: IActionEvaluator, x: float, V2: Potential) -> float:
    """Residual -f'(x) + f(x)^2 - V2(x) of the fermionic Riccati equation."""
    value = f.value(x)
    return -f.derivative(x) + value * value - _potential_at(V2, x)


def bernoulli_residual(f: IActionEvaluator, x: float, hbar: float = 1.0) -> float:
    """Residual f'(x) + hbar f(x) + f(x)^2 of the Bernoulli equation solved by the thermal action."""
    value = f.value(x)
    return f.derivative(x) + hbar * value + value * value


def fermionic_partner(seed: IActionEvaluator, x: float) -> float:
    """Partner potential V2(x) = -f_p'(x) + f_p(x)^2 with zero factorization constant."""
    value = seed.value(x)
    return -seed.derivative(x) + value * value


def residual_report(
    kind: ResidualKind,
    f: IActionEvaluator,
    grid: Sequence[float],
    target: Potential
) -> RiccatiResidualReport:
    """Evaluate one residual over a grid.

    Args:
        kind: bosonic, fermionic or bernoulli
        f: Action evaluator
        grid: Sample points (at least one)
        target: Potential for bosonic/fermionic kinds, hbar for bernoulli

    Returns:
        RiccatiResidualReport with the pointwise residuals and their maximum
    """
    if not grid:
        raise ArgumentError("Residual report needs at least one grid point")
    kind = ResidualKind(kind)
    points: List[float] = [float(x) for x in grid]

    if kind is ResidualKind.BOSONIC:
        residuals = [bosonic_residual(f, x, target) for x in points]
    elif kind is ResidualKind.FERMIONIC:
        residuals = [fermionic_residual(f, x, target) for x in points]
    else:
        residuals = [bernoulli_residual(f, x, float(target)) for x in points]

    index = max(range(len(points)), key=lambda i: abs(residuals[i]))
    report = RiccatiResidualReport(
        kind=kind,
        grid=points,
        residuals=residuals,
        max_abs_residual=abs(residuals[index]),
        argmax_x=points[index],
    )
    logger.debug(
        f"{kind.value} residual of {f.name}: max {report.max_abs_residual:.3e} "
        f"at x = {report.argmax_x:.6g}"
    )
    return report
