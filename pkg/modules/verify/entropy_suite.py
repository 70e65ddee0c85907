"""Third-law normalized entropy checks."""

import math
from typing import List

from core.models.action import ActionModel
from core.models.reports import CheckResult
from modules.actions.closed_forms import planck_action
from modules.darboux.family import DarbouxFamily, build_family
from modules.numerics.scanning import linear_grid
from modules.thermo.observables import entropy, entropy_derivative_check
from modules.verify.base import VerificationSuite, largest, relative

THIRD_LAW_TOLERANCE = 1e-8


class EntropySuite(VerificationSuite):
    """Checks S = x f - ln|w| - C against its oracles and its derivative identity."""

    @property
    def name(self) -> str:
        return "entropy"

    def checks(self) -> List[CheckResult]:
        c = self._config
        return [
            self.check("entropy.eq1-vacuum-fluctuations-zero", c.closed_form_tolerance, self._vacuum_zero),
            self.check("entropy.eq1-planck-oscillator-oracle", 1e-10, self._planck_oracle),
            self.check("entropy.eq5-derivative-identity", c.fd_tolerance, self._derivative_identity),
            self.check("entropy.eq16-third-law-tail", THIRD_LAW_TOLERANCE, self._third_law),
            self.check("entropy.eq16-scale-invariance", c.closed_form_tolerance, self._scale_invariance),
        ]

    def _families(self, hbar: float) -> List[DarbouxFamily]:
        grid = self.positive_grid()
        domain = (grid[0], grid[-1])
        return [
            DarbouxFamily.unchecked(ActionModel.planck(hbar)),
            build_family(ActionModel.vacuum(hbar), 2.0 / hbar, domain),
            build_family(ActionModel.planck(hbar), 2.0, domain),
        ]

    def _vacuum_zero(self) -> float:
        values = []
        for hbar in self._config.hbar_values:
            vacuum = ActionModel.vacuum(hbar)
            values.extend(entropy(vacuum, x) for x in self.symmetric_grid())
        return largest(values)

    def _planck_oracle(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            planck = ActionModel.planck(hbar)
            for x in self.positive_grid():
                oracle = x * planck_action(x, hbar) - math.log(2.0 * math.sinh(0.5 * hbar * x))
                residuals.append(entropy(planck, x) - oracle)
        return largest(residuals)

    def _derivative_identity(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            for family in self._families(hbar):
                for x in self.fd_grid():
                    residuals.append(relative(entropy_derivative_check(family, x), x * family.derivative(x)))
        return largest(residuals)

    def _third_law(self) -> float:
        """|S| decreases along the tail hbar x in [5, 25] and is small at its end."""
        worst = 0.0
        for hbar in self._config.hbar_values:
            tail = linear_grid(5.0 / hbar, 25.0 / hbar, 10)
            families = (
                DarbouxFamily.unchecked(ActionModel.planck(hbar)),
                DarbouxFamily.unchecked(ActionModel.vacuum(hbar), 2.0 / hbar),
            )
            for family in families:
                magnitudes = [abs(entropy(family, x)) for x in tail]
                if any(b > a for a, b in zip(magnitudes, magnitudes[1:])):
                    return math.inf
                worst = max(worst, magnitudes[-1])
        return worst

    def _scale_invariance(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            planck = ActionModel.planck(hbar)
            unit = DarbouxFamily.unchecked(planck, 2.0)
            scaled = DarbouxFamily.unchecked(planck, 2.0 * 7.3 ** 2, scale=7.3)
            for x in self.fd_grid():
                residuals.append(entropy(unit, x) - entropy(scaled, x))
        return largest(residuals)
