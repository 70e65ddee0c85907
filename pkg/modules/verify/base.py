"""Shared machinery for verification suites."""

import logging
import math
from typing import Callable, Iterable, List

from core.interfaces.errors import ThermoDarbouxError
from core.interfaces.suite import IVerificationSuite
from core.models.config import VerifyConfig
from core.models.reports import CheckResult
from modules.numerics.scanning import linear_grid, log_grid

logger = logging.getLogger(__name__)

# Finite-difference oracles are sampled away from the Planck pole and the
# exponential tail, where O(h^4) differences keep relative accuracy
FD_WINDOW = (0.5, 5.0)


def relative(residual: float, scale: float) -> float:
    """Residual relative to max(1, |scale|)."""
    return abs(residual) / max(1.0, abs(scale))


def largest(values: Iterable[float]) -> float:
    """Maximum of absolute values (0 for an empty iterable)."""
    result = 0.0
    for value in values:
        value = abs(value)
        if math.isnan(value):
            return math.nan
        result = max(result, value)
    return result


class VerificationSuite(IVerificationSuite):
    """Base suite: canonical grids plus exception-safe check execution."""

    def __init__(self):
        self._config = VerifyConfig()

    def positive_grid(self) -> List[float]:
        """Log-spaced canonical grid for x > 0 families."""
        c = self._config
        return log_grid(c.grid_start, c.grid_stop, c.grid_count)

    def symmetric_grid(self) -> List[float]:
        """Linear canonical grid on [-w, w] for families regular at x = 0."""
        c = self._config
        return linear_grid(-c.symmetric_half_width, c.symmetric_half_width, c.grid_count)

    def fd_grid(self) -> List[float]:
        """Part of the positive grid used by finite-difference oracles."""
        lo, hi = FD_WINDOW
        return [x for x in self.positive_grid() if lo <= x <= hi]

    def check(self, name: str, tolerance: float, compute: Callable[[], float]) -> CheckResult:
        """Run one check.

        Any library error or arithmetic failure inside the check counts as an
        infinite residual.

        Args:
            name: Check name citing the tested identity
            tolerance: Largest acceptable residual
            compute: Callable returning the maximum residual

        Returns:
            CheckResult
        """
        try:
            residual = float(compute())
        except (ThermoDarbouxError, ArithmeticError) as e:
            logger.error(f"Check {name} failed with {type(e).__name__}: {e}")
            residual = math.inf
        passed = residual <= tolerance
        level = logging.DEBUG if passed else logging.WARNING
        logger.log(level, f"{name}: residual {residual:.3e} (tolerance {tolerance:.1e}) {'ok' if passed else 'FAILED'}")
        return CheckResult(name=name, max_residual=residual, tolerance=tolerance, passed=passed)

    def run(self, config: VerifyConfig) -> List[CheckResult]:
        self._config = config
        logger.info(f"Running verification suite '{self.name}'")
        results = self.checks()
        logger.info(f"Suite '{self.name}': {sum(r.passed for r in results)}/{len(results)} checks passed")
        return results

    def checks(self) -> List[CheckResult]:
        """Run every check of the suite against the current config."""
        raise NotImplementedError
