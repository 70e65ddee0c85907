"""Riccati, Bernoulli and zero-mode identities of the closed-form actions."""

import math
from typing import List

from core.models.action import ActionModel, ZeroMode
from core.models.reports import CheckResult
from modules.actions.closed_forms import fermi_action, planck_action, thermal_action
from modules.actions.zero_modes import fermionic_zero_mode, log_abs_zero_mode, log_derivative_action
from modules.darboux.riccati import bernoulli_residual, bosonic_residual, fermionic_partner
from modules.numerics.differences import derivative_richardson, second_derivative_central
from modules.numerics.kernels import csch2_half
from modules.verify.base import VerificationSuite, largest, relative


class RiccatiSuite(VerificationSuite):
    """Checks that the closed-form actions solve their Riccati-type equations."""

    @property
    def name(self) -> str:
        return "riccati"

    def checks(self) -> List[CheckResult]:
        c = self._config
        return [
            self.check("riccati.eq2-planck-bosonic-residual", c.tolerance, self._planck_bosonic),
            self.check("riccati.eq2-vacuum-bosonic-residual", c.tolerance, self._vacuum_bosonic),
            self.check("riccati.eq17-fermi-bosonic-residual", c.tolerance, self._fermi_bosonic),
            self.check("riccati.eq3-thermal-bernoulli-residual", c.tolerance, self._thermal_bernoulli),
            self.check("riccati.eq1-planck-thermal-decomposition", c.closed_form_tolerance, self._decomposition),
            self.check("riccati.eq1-planck-fermi-product", c.closed_form_tolerance, self._product),
            self.check("riccati.eq5-log-derivative-consistency", c.fd_tolerance, self._log_derivative),
            self.check("riccati.eq6-planck-partner-potential", c.tolerance, self._partner),
            self.check("riccati.eq7-fermionic-zero-mode", c.fd_tolerance, self._fermionic_zero_mode),
            self.check("riccati.eq17-symmetric-mode-fermi-dirac", c.closed_form_tolerance, self._symmetric_mode),
        ]

    def _bosonic(self, model_factory, grid) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            model = model_factory(hbar)
            v1 = (0.5 * hbar) ** 2
            residuals.extend(relative(bosonic_residual(model, x, v1), model.value(x) ** 2) for x in grid)
        return largest(residuals)

    def _planck_bosonic(self) -> float:
        return self._bosonic(ActionModel.planck, self.positive_grid())

    def _vacuum_bosonic(self) -> float:
        return self._bosonic(ActionModel.vacuum, self.symmetric_grid())

    def _fermi_bosonic(self) -> float:
        return self._bosonic(ActionModel.fermi_symmetric, self.symmetric_grid())

    def _thermal_bernoulli(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            model = ActionModel.thermal(hbar)
            residuals.extend(
                relative(bernoulli_residual(model, x, hbar), model.value(x) ** 2)
                for x in self.positive_grid()
            )
        return largest(residuals)

    def _decomposition(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            for x in self.positive_grid():
                residuals.append(
                    (planck_action(x, hbar) - thermal_action(x, hbar) - 0.5 * hbar) / (0.5 * hbar)
                )
        return largest(residuals)

    def _product(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            target = (0.5 * hbar) ** 2
            for x in self.symmetric_grid():
                residuals.append((planck_action(x, hbar) * fermi_action(x, hbar) - target) / target)
        return largest(residuals)

    def _log_derivative(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            for mode in (ZeroMode.planck(hbar), ZeroMode.symmetric(hbar), ZeroMode.general(2.0, -0.25, hbar)):
                for x in self.fd_grid():
                    if mode.node() is not None and abs(x - mode.node()) < 0.1:
                        continue
                    numeric = derivative_richardson(lambda y: log_abs_zero_mode(mode, y), x)
                    residuals.append(log_derivative_action(mode, x) - numeric)
        return largest(residuals)

    def _partner(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            model = ActionModel.planck(hbar)
            for x in self.positive_grid():
                expected = (0.5 * hbar) ** 2 + 0.5 * hbar * hbar * csch2_half(hbar * x)
                residuals.append(relative(fermionic_partner(model, x) - expected, expected))
        return largest(residuals)

    def _fermionic_zero_mode(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            for model in (ActionModel.planck(hbar), ActionModel.vacuum(hbar)):
                mode = model.zero_mode()
                for x in self.fd_grid():
                    curvature = second_derivative_central(lambda y: fermionic_zero_mode(mode, y), x)
                    target = fermionic_partner(model, x) * fermionic_zero_mode(mode, x)
                    residuals.append(relative(curvature - target, target))
        return largest(residuals)

    def _symmetric_mode(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            mode = ZeroMode.symmetric(hbar)
            for x in self.symmetric_grid():
                fermi_dirac = -0.5 * hbar + hbar / (math.exp(-hbar * x) + 1.0)
                residuals.append(log_derivative_action(mode, x) - fermi_dirac)
        return largest(residuals)
