"""Verification suite plugin registration."""

import logging

from core.registry.plugin_registry import PluginRegistry
from modules.verify.darboux_suite import DarbouxSuite
from modules.verify.entropy_suite import EntropySuite
from modules.verify.fdt_suite import FdtSuite
from modules.verify.limits_suite import LimitsSuite
from modules.verify.riccati_suite import RiccatiSuite

logger = logging.getLogger(__name__)


def register():
    """Register the built-in verification suites, in report order."""
    registry = PluginRegistry()

    registry.register_verify_suite("riccati", RiccatiSuite)
    registry.register_verify_suite("darboux", DarbouxSuite)
    registry.register_verify_suite("limits", LimitsSuite)
    registry.register_verify_suite("entropy", EntropySuite)
    registry.register_verify_suite("fdt", FdtSuite)

    logger.debug("Verification suites registered")


# Auto-register on import
register()
