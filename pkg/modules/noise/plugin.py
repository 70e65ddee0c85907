"""Resistance model plugin registration."""

import logging

from core.registry.plugin_registry import PluginRegistry
from modules.noise.resistance import ConstantResistance, ParallelRLCResistance

logger = logging.getLogger(__name__)


def register():
    """Register the built-in resistance models with the plugin registry."""
    registry = PluginRegistry()

    registry.register_resistance_model("constant", ConstantResistance)
    registry.register_resistance_model("parallel_rlc", ParallelRLCResistance)

    logger.debug("Resistance models registered")


# Auto-register on import
register()
