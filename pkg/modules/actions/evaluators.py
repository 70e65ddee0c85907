"""Evaluators binding ActionModel tags to the closed-form actions."""

import logging

from core.interfaces.action import IActionEvaluator
from core.models.action import ActionModel
from modules.actions.closed_forms import (
    fermi_action,
    fermi_derivative,
    planck_action,
    planck_derivative,
    thermal_action,
    thermal_derivative,
    vacuum_action,
)
from modules.actions.zero_modes import log_derivative_action, log_derivative_slope
from modules.numerics.differences import derivative_central

logger = logging.getLogger(__name__)


class ActionEvaluator(IActionEvaluator):
    """Base evaluator for one ActionModel.

    Subclasses implement value(); derivative() falls back to a central
    difference unless a subclass provides the analytic form.
    """

    def __init__(self, model: ActionModel):
        """Bind the evaluator to a model.

        Args:
            model: Action model carrying the family parameters
        """
        self._model = model
        self._hbar = model.hbar

    def derivative(self, x: float) -> float:
        """Finite-difference fallback for df/dx."""
        return derivative_central(self.value, x)

    @property
    def model(self) -> ActionModel:
        return self._model

    @property
    def name(self) -> str:
        return self._model.name


class PlanckEvaluator(ActionEvaluator):
    """Planck action (hbar/2) coth(hbar x / 2)."""

    def value(self, x: float) -> float:
        return planck_action(x, self._hbar)

    def derivative(self, x: float) -> float:
        return planck_derivative(x, self._hbar)


class VacuumEvaluator(ActionEvaluator):
    """Constant vacuum action hbar / 2."""

    def value(self, x: float) -> float:
        return vacuum_action(self._hbar)

    def derivative(self, x: float) -> float:
        return 0.0


class ThermalEvaluator(ActionEvaluator):
    """Pure thermal action hbar / (e^{hbar x} - 1)."""

    def value(self, x: float) -> float:
        return thermal_action(x, self._hbar)

    def derivative(self, x: float) -> float:
        return thermal_derivative(x, self._hbar)


class FermiEvaluator(ActionEvaluator):
    """Fermi-Dirac action (hbar/2) tanh(hbar x / 2)."""

    def value(self, x: float) -> float:
        return fermi_action(x, self._hbar)

    def derivative(self, x: float) -> float:
        return fermi_derivative(x, self._hbar)


class GeneralZeroModeEvaluator(ActionEvaluator):
    """Logarithmic derivative of A e^{hbar x/2} + B e^{-hbar x/2}."""

    def __init__(self, model: ActionModel):
        super().__init__(model)
        self._mode = model.zero_mode()
        logger.debug(f"General zero-mode action with A={model.A}, B={model.B}, node={self._mode.node()}")

    def value(self, x: float) -> float:
        return log_derivative_action(self._mode, x)

    def derivative(self, x: float) -> float:
        return log_derivative_slope(self._mode, x)
