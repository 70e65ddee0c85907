"""Darboux family plugin registration."""

import logging

from core.models.action import ActionFamily
from core.registry.plugin_registry import PluginRegistry
from modules.darboux.evaluator import DarbouxEvaluator

logger = logging.getLogger(__name__)


def register():
    """Register the darboux action family with the plugin registry."""
    registry = PluginRegistry()
    registry.register_action_family(ActionFamily.DARBOUX.value, DarbouxEvaluator)
    logger.debug("Darboux action family registered")


# Auto-register on import
register()
