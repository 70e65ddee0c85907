"""Action family plugin registration."""

import logging

from core.models.action import ActionFamily
from core.registry.plugin_registry import PluginRegistry
from modules.actions.evaluators import (
    FermiEvaluator,
    GeneralZeroModeEvaluator,
    PlanckEvaluator,
    ThermalEvaluator,
    VacuumEvaluator,
)

logger = logging.getLogger(__name__)


def register():
    """Register the closed-form action families with the plugin registry."""
    registry = PluginRegistry()

    registry.register_action_family(ActionFamily.PLANCK.value, PlanckEvaluator)
    registry.register_action_family(ActionFamily.VACUUM.value, VacuumEvaluator)
    registry.register_action_family(ActionFamily.THERMAL.value, ThermalEvaluator)
    registry.register_action_family(ActionFamily.FERMI_SYMMETRIC.value, FermiEvaluator)
    registry.register_action_family(ActionFamily.GENERAL_ZERO_MODE.value, GeneralZeroModeEvaluator)

    logger.debug("Closed-form action families registered")


# Auto-register on import
register()
