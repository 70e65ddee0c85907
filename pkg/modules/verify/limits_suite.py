"""Limit laws: lambda -> infinity, classical and zero-point limits, kink plateaus."""

import math
from typing import List

from core.models.action import ActionModel
from core.models.reports import CheckResult
from modules.actions.closed_forms import planck_action
from modules.darboux.convergence import lambda_convergence_report
from modules.darboux.family import build_family
from modules.darboux.integrals import i0_integral
from modules.numerics.scanning import log_grid
from modules.thermo.kink import analytic_kink_width, kink_grid, kink_profile
from modules.verify.base import VerificationSuite, largest

# Deviation ratio targets when lambda doubles
RATIO_CENTER = 0.5
RATIO_WINDOW = 0.05
POTENTIAL_RATIO_WINDOW = 0.1


class LimitsSuite(VerificationSuite):
    """Checks the asymptotic statements attached to the actions and families."""

    @property
    def name(self) -> str:
        return "limits"

    def checks(self) -> List[CheckResult]:
        c = self._config
        return [
            self.check("limits.eq14-lambda-limit-ratio-planck", RATIO_WINDOW, lambda: self._ratio(ActionModel.planck)),
            self.check("limits.eq14-lambda-limit-ratio-vacuum", RATIO_WINDOW, lambda: self._ratio(ActionModel.vacuum)),
            self.check("limits.eq13-potential-limit-ratio", POTENTIAL_RATIO_WINDOW, self._potential_ratio),
            self.check("limits.eq1-classical-limit", c.closed_form_tolerance, self._classical),
            self.check("limits.eq1-zero-point-limit", c.closed_form_tolerance, self._zero_point),
            self.check("limits.eq13-vacuum-kink-plateaus", 1e-6, self._kink_plateaus),
            self.check("limits.eq13-vacuum-kink-width", 1e-3, self._kink_width),
        ]

    def doubling_lambdas(self, model: ActionModel) -> List[float]:
        """lambda, 2 lambda, 4 lambda starting where lambda dominates I0 on the grid."""
        grid = self.positive_grid()
        mode = model.zero_mode()
        largest_i0 = max(abs(i0_integral(mode, x)) for x in grid)
        start = max(10.0, 10.0 * largest_i0)
        return [start, 2.0 * start, 4.0 * start]

    def _ratio(self, factory) -> float:
        deviations = []
        for hbar in self._config.hbar_values:
            model = factory(hbar)
            report = lambda_convergence_report(model, self.doubling_lambdas(model), self.positive_grid())
            if not report.is_monotone():
                return math.inf
            deviations.extend(ratio - RATIO_CENTER for ratio in report.ratios())
        return largest(deviations)

    def _potential_ratio(self) -> float:
        deviations = []
        grid = self.positive_grid()
        for hbar in self._config.hbar_values:
            for model in (ActionModel.planck(hbar), ActionModel.vacuum(hbar)):
                sups = []
                for lam in self.doubling_lambdas(model):
                    family = build_family(model, lam, (grid[0], grid[-1]))
                    sups.append(largest(family.potential(x) - family.seed_potential(x) for x in grid))
                deviations.extend(b / a - RATIO_CENTER for a, b in zip(sups, sups[1:]))
        return largest(deviations)

    def _classical(self) -> float:
        """x f_P(x) -> 1 with |x f_P - 1| <= (hbar x)^2 / 12 for hbar x <= 0.01."""
        excess = []
        for hbar in self._config.hbar_values:
            for u in log_grid(1e-6, 1e-2, 32):
                x = u / hbar
                excess.append(max(0.0, abs(x * planck_action(x, hbar) - 1.0) - u * u / 12.0))
        return largest(excess)

    def _zero_point(self) -> float:
        """f_P -> hbar/2 once hbar x is large."""
        residuals = []
        for hbar in self._config.hbar_values:
            for u in log_grid(40.0, 700.0, 32):
                residuals.append((planck_action(u / hbar, hbar) - 0.5 * hbar) / hbar)
        return largest(residuals)

    def _kink_profiles(self):
        c = self._config
        for hbar in c.hbar_values:
            grid = kink_grid(hbar, c.kink_half_width, c.kink_grid_count)
            for scaled_lambda in c.kink_lambdas:
                # kink_lambdas are given as hbar * lambda
                family = build_family(ActionModel.vacuum(hbar), scaled_lambda / hbar, (grid[0], grid[-1]))
                yield hbar, kink_profile(family, grid)

    def _kink_plateaus(self) -> float:
        residuals = []
        for hbar, profile in self._kink_profiles():
            residuals.append(profile.left_asymptote - 0.5 * hbar)
            residuals.append(profile.right_asymptote + 0.5 * hbar)
        return largest(residuals)

    def _kink_width(self) -> float:
        residuals = []
        for hbar, profile in self._kink_profiles():
            expected = analytic_kink_width(hbar)
            residuals.append(profile.transition_width / expected - 1.0)
        return largest(residuals)
