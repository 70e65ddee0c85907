"""Identities of the one-parameter Darboux families."""

import math
from typing import Iterator, List, Tuple

from core.models.action import ActionFamily, ActionModel, is_seed_lambda
from core.models.reports import CheckResult
from modules.darboux.family import DarbouxFamily, build_family
from modules.darboux.integrals import I0Mode, i0_integral
from modules.darboux.riccati import fermionic_partner
from modules.darboux.validation import validate_lambda
from modules.numerics.differences import derivative_richardson, second_derivative_central
from modules.verify.base import VerificationSuite, largest, relative

Member = Tuple[DarbouxFamily, List[float]]


class DarbouxSuite(VerificationSuite):
    """Checks the family construction against its defining equations."""

    @property
    def name(self) -> str:
        return "darboux"

    def checks(self) -> List[CheckResult]:
        c = self._config
        return [
            self.check("darboux.eq8-fermionic-invariance", c.tolerance, self._fermionic_invariance),
            self.check("darboux.eq12-bosonic-self-consistency", c.tolerance, self._bosonic_consistency),
            self.check("darboux.eq9-bernoulli-v-function", c.fd_tolerance, self._bernoulli),
            self.check("darboux.eq10-i0-closed-form-vs-quadrature", c.quad_agreement, self._i0_agreement),
            self.check("darboux.eq11-seed-reproduction", 0.0, self._seed_reproduction),
            self.check("darboux.eq13-vacuum-closed-form", c.closed_form_tolerance, self._vacuum_closed_form),
            self.check("darboux.eq13-vacuum-lambda-one-over-hbar", c.closed_form_tolerance, self._fermionic_branch),
            self.check("darboux.eq13-vacuum-lambda-two-over-hbar", c.closed_form_tolerance, self._tanh_branch),
            self.check("darboux.eq14-log-derivative-of-transformed-zero-mode", c.fd_tolerance, self._log_derivative),
            self.check("darboux.eq14-transformed-zero-mode-equation", c.fd_tolerance, self._zero_mode_equation),
        ]

    def members(self) -> Iterator[Member]:
        """Every (family, grid) pair under test.

        Planck seeds live on the positive grid. Vacuum seeds use the symmetric
        grid when lambda is valid there and the positive grid otherwise.
        """
        c = self._config
        positive = self.positive_grid()
        symmetric = self.symmetric_grid()
        for hbar in c.hbar_values:
            planck = ActionModel.planck(hbar)
            for lam in c.lambdas:
                yield build_family(planck, lam, (positive[0], positive[-1])), positive

            vacuum = ActionModel.vacuum(hbar)
            for lam in list(c.vacuum_lambdas) + [math.inf]:
                report = validate_lambda(vacuum, vacuum.zero_mode(), lam, (symmetric[0], symmetric[-1]))
                grid = symmetric if report.valid else positive
                yield build_family(vacuum, lam, (grid[0], grid[-1])), grid

    def _fermionic_invariance(self) -> float:
        residuals = []
        for family, grid in self.members():
            for x in grid:
                value = family.value(x)
                v2 = fermionic_partner(family.seed, x)
                residuals.append(relative(-family.derivative(x) + value * value - v2, v2))
        return largest(residuals)

    def _bosonic_consistency(self) -> float:
        residuals = []
        for family, grid in self.members():
            for x in grid:
                value = family.value(x)
                v1g = family.potential(x)
                residuals.append(relative(family.derivative(x) + value * value - v1g, max(abs(v1g), value * value)))
        return largest(residuals)

    def _bernoulli(self) -> float:
        residuals = []
        for family, _ in self.members():
            if family.is_seed:
                continue
            for x in self.fd_grid():
                v = family.v(x)
                drive = 2.0 * v * family.seed.value(x)
                slope = derivative_richardson(family.v, x)
                residuals.append(relative(slope + drive - 1.0, max(abs(slope), abs(drive))))
        return largest(residuals)

    def _i0_agreement(self) -> float:
        residuals = []
        for hbar in self._config.hbar_values:
            for model, grid in ((ActionModel.planck(hbar), self.positive_grid()),
                                (ActionModel.vacuum(hbar), self.symmetric_grid())):
                mode = model.zero_mode()
                for x in grid:
                    if abs(hbar * x) > 10.0:
                        continue
                    exact = i0_integral(mode, x, I0Mode.CLOSED_FORM)
                    numeric = i0_integral(mode, x, I0Mode.QUADRATURE)
                    residuals.append(relative(exact - numeric, exact))
        return largest(residuals)

    def _seed_reproduction(self) -> float:
        residuals = []
        for family, grid in self.members():
            if not is_seed_lambda(family.lam):
                continue
            residuals.extend(family.value(x) - family.seed.value(x) for x in grid)
        return largest(residuals)

    def _vacuum_closed_form(self) -> float:
        residuals = []
        for family, grid in self.members():
            if family.seed.family is not ActionFamily.VACUUM or family.is_seed:
                continue
            hbar, lam = family.hbar, family.lam
            for x in grid:
                growth = math.exp(hbar * x)
                expected = 0.5 * hbar - hbar * growth / (growth - 1.0 + hbar * lam)
                residuals.append(family.value(x) - expected)
        return largest(residuals)

    def _special_lambda(self, multiple: float, expected) -> float:
        residuals = []
        grid = self.symmetric_grid()
        for hbar in self._config.hbar_values:
            family = build_family(ActionModel.vacuum(hbar), multiple / hbar, (grid[0], grid[-1]))
            residuals.extend(family.value(x) - expected(x, hbar) for x in grid)
        return largest(residuals)

    def _fermionic_branch(self) -> float:
        return self._special_lambda(1.0, lambda x, hbar: -0.5 * hbar)

    def _tanh_branch(self) -> float:
        return self._special_lambda(2.0, lambda x, hbar: -0.5 * hbar * math.tanh(0.5 * hbar * x))

    def _log_derivative(self) -> float:
        residuals = []
        for family, _ in self.members():
            for x in self.fd_grid():
                numeric = derivative_richardson(family.log_abs_transformed_zero_mode, x)
                residuals.append(relative(family.value(x) - numeric, family.value(x)))
        return largest(residuals)

    def _zero_mode_equation(self) -> float:
        residuals = []
        for family, _ in self.members():
            for x in self.fd_grid():
                w = family.transformed_zero_mode(x)
                curvature = second_derivative_central(family.transformed_zero_mode, x)
                v1g = family.potential(x)
                residuals.append(relative(curvature / w - v1g, v1g))
        return largest(residuals)
