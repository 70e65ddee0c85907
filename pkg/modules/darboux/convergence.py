"""Sup-norm convergence of a Darboux family towards its seed as lambda grows."""

import logging
from typing import Optional, Sequence

from core.interfaces.errors import ArgumentError
from core.models.action import ActionModel, format_lambda, is_seed_lambda
from core.models.config import NumericsConfig
from core.models.results import ConvergenceReport, ConvergenceRow
from modules.darboux.family import build_family

logger = logging.getLogger(__name__)


def lambda_convergence_report(
    seed: ActionModel,
    lambdas: Sequence[float],
    grid: Sequence[float],
    scale: float = 1.0,
    strict: bool = False,
    numerics: Optional[NumericsConfig] = None
) -> ConvergenceReport:
    """Tabulate sup over the grid of |f_g(x; lambda) - f_p(x)| for each lambda.

    Since f_g - f_p = -w^2 / (I0 + lambda), the deviation falls like 1/lambda,
    and doubling lambda roughly halves it once lambda dominates I0 on the grid.

    Args:
        seed: Seed action
        lambdas: Increasing Darboux parameters (+inf allowed last)
        grid: Strictly increasing sample points
        scale: Zero-mode normalization
        strict: Require lambda > 0
        numerics: Quadrature and scan settings

    Returns:
        ConvergenceReport with one row per lambda

    Raises:
        ArgumentError: If the lambdas are not increasing or the grid is empty
        LambdaValidationError: If some lambda is invalid on the grid
    """
    points = [float(x) for x in grid]
    if not points:
        raise ArgumentError("Convergence report needs at least one grid point")
    if any(b <= a for a, b in zip(lambdas, lambdas[1:])):
        raise ArgumentError(f"lambda sequence must be increasing, got {list(lambdas)}")

    domain = (points[0], points[-1])
    rows = []
    previous: Optional[float] = None
    for lam in lambdas:
        family = build_family(seed, lam, domain, scale=scale, strict=strict, numerics=numerics)
        if is_seed_lambda(lam):
            deviation, argmax_x = 0.0, points[0]
        else:
            deviations = [abs(family.value(x) - seed.value(x)) for x in points]
            index = max(range(len(points)), key=deviations.__getitem__)
            deviation, argmax_x = deviations[index], points[index]

        ratio = deviation / previous if previous else None
        rows.append(ConvergenceRow(lam=lam, sup_deviation=deviation, argmax_x=argmax_x, ratio=ratio))
        logger.debug(f"lambda={format_lambda(lam)}: sup deviation {deviation:.6e} at x = {argmax_x:.6g}")
        previous = deviation

    return ConvergenceReport(seed=seed.name, grid=points, rows=rows)
