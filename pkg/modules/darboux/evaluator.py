"""Evaluator for darboux-tagged ActionModels."""

from core.models.action import ActionModel
from modules.actions.evaluators import ActionEvaluator
from modules.darboux.family import DarbouxFamily


class DarbouxEvaluator(ActionEvaluator):
    """Evaluates ActionModel.darboux(seed, lam) through an unscanned DarbouxFamily.

    The family covers the seed's natural domain; a zero of I0 + lambda raises
    SingularityError at the offending point.
    """

    def __init__(self, model: ActionModel):
        super().__init__(model)
        seed = ActionModel(model.seed, model.hbar, model.A, model.B)
        self._family = DarbouxFamily.unchecked(seed, model.lam)

    @property
    def family(self) -> DarbouxFamily:
        return self._family

    def value(self, x: float) -> float:
        return self._family.value(x)

    def derivative(self, x: float) -> float:
        return self._family.derivative(x)
