"""Validation of the Darboux parameter against zeros of I0(x) + lambda."""

import logging
import math
from typing import Dict, Optional, Tuple

import numpy as np

from core.interfaces.errors import ArgumentError
from core.models.action import ActionModel, ZeroMode, format_lambda, is_seed_lambda
from core.models.results import LambdaValidation
from modules.darboux.integrals import I0Mode, log_abs_shifted_i0, shifted_i0
from modules.numerics.kernels import EXP_LIMIT
from modules.numerics.scanning import scan_sign_change

logger = logging.getLogger(__name__)

MIN_GRID_DENSITY = 16


def validate_lambda(
    seed: ActionModel,
    seed_mode: ZeroMode,
    lam: float,
    domain: Tuple[float, float],
    grid_density: int = 256,
    strict: bool = False,
    i0_mode: Optional[I0Mode] = None
) -> LambdaValidation:
    """Scan I0(x) + lambda for zeros over a bounded domain.

    A zero of I0 + lambda is a pole of every family member, so such lambda
    values are forbidden on the domain. Violations are returned as data.

    Args:
        seed: Seed action f_p
        seed_mode: Zero mode w with f_p = w'/w
        lam: Darboux parameter (+inf is always valid)
        domain: Bounded interval (lo, hi) with lo <= hi
        grid_density: Number of scan points (>= 16)
        strict: Also require lambda > 0
        i0_mode: How I0 is evaluated (None picks the default for the mode)

    Returns:
        LambdaValidation report

    Raises:
        ArgumentError: If the domain is unbounded or the grid too coarse
    """
    lo, hi = float(domain[0]), float(domain[1])
    if grid_density < MIN_GRID_DENSITY:
        raise ArgumentError(f"grid_density must be >= {MIN_GRID_DENSITY}, got {grid_density}")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise ArgumentError(f"Validation domain must be a bounded interval, got {domain!r}")
    if math.isnan(lam):
        raise ArgumentError("Darboux parameter must not be NaN")

    report = LambdaValidation(lam=lam, domain=(lo, hi), grid_density=grid_density, valid=True)
    if is_seed_lambda(lam):
        return report

    if strict and not lam > 0:
        report.valid = False
        report.reason = f"strict mode requires lambda > 0, got {format_lambda(lam)}"
        return report

    margins: Dict[float, float] = {}

    def margin_at(y: float) -> float:
        if y not in margins:
            if abs(seed_mode.hbar * y) <= EXP_LIMIT:
                margins[y] = shifted_i0(seed_mode, y, lam, i0_mode)
            else:
                # clamped; only the sign matters this far out
                log_margin, sign = log_abs_shifted_i0(seed_mode, y, lam, i0_mode)
                margins[y] = sign * math.exp(max(-EXP_LIMIT, min(log_margin, EXP_LIMIT)))
        return margins[y]

    if lo == hi:
        value = margin_at(lo)
        brackets = [(lo, hi)] if value == 0.0 else []
    else:
        grid = [float(p) for p in np.linspace(lo, hi, grid_density)]
        brackets = scan_sign_change(margin_at, grid)

    report.brackets = brackets
    report.min_margin = min(abs(v) for v in margins.values())
    report.boundary_degenerate = lam == 0
    if brackets:
        report.valid = False
        spans = ", ".join(f"[{a:.6g}, {b:.6g}]" for a, b in brackets)
        report.reason = f"I0(x) + lambda vanishes on {seed.name} seed within {spans}"
        logger.debug(f"lambda={format_lambda(lam)} rejected: {report.reason}")
    elif report.boundary_degenerate:
        logger.warning(
            f"lambda = 0 is boundary-degenerate on [{lo}, {hi}]: I0(0) + lambda = 0 at x = 0"
        )

    return report
