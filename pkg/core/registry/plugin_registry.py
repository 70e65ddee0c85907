"""Plugin registry for managing pluggable components."""

import logging
from typing import Dict, List, Optional, Tuple, Type, Union

from core.interfaces.action import IActionEvaluator
from core.interfaces.errors import ArgumentError, UnsupportedError
from core.interfaces.resistance import IResistanceModel
from core.interfaces.suite import IVerificationSuite
from core.models.action import ActionFamily

logger = logging.getLogger(__name__)

ALL_SUITES = "all"


class PluginRegistry:
    """Singleton registry for all plugin types.

    The plugin registry maintains a catalog of available implementations
    for each pluggable interface (action families, resistance models,
    verification suites). Modules register their implementations when their
    plugin module is imported, and other modules retrieve them by name.

    Example:
        registry = PluginRegistry()
        registry.register_resistance_model("constant", ConstantResistance)
        model = registry.resistance_model_for("constant").from_config({"R": 50.0})
        evaluator = registry.evaluator_for(ActionFamily.PLANCK)(ActionModel.planck())
    """

    _instance = None

    def __new__(cls):
        """Ensure only one instance exists (singleton pattern)."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Initialize the plugin registry."""
        if self._initialized:
            return

        self._action_families: Dict[str, Type[IActionEvaluator]] = {}
        self._resistance_models: Dict[str, Type[IResistanceModel]] = {}
        self._verify_suites: Dict[str, Type[IVerificationSuite]] = {}
        self._initialized = True

        logger.debug("PluginRegistry initialized")

    # Action family methods
    def register_action_family(self, name: str, evaluator_class: Type[IActionEvaluator]) -> None:
        """Register an action family evaluator.

        Args:
            name: Family tag (e.g., "planck", "darboux")
            evaluator_class: Class implementing IActionEvaluator, built from an ActionModel
        """
        self._action_families[name] = evaluator_class
        logger.debug(f"Registered action family: {name}")

    def get_action_family(self, name: str) -> Optional[Type[IActionEvaluator]]:
        """Get an action family evaluator by name.

        Args:
            name: Family tag

        Returns:
            Evaluator class or None if not found
        """
        return self._action_families.get(name)

    def list_action_families(self) -> List[str]:
        """List all registered action families.

        Returns:
            List of family tags
        """
        return list(self._action_families.keys())

    def evaluator_for(self, family: Union[ActionFamily, str]) -> Type[IActionEvaluator]:
        """Resolve the evaluator class of an action family.

        Args:
            family: ActionFamily member or its tag

        Returns:
            Evaluator class, constructed from an ActionModel of that family

        Raises:
            UnsupportedError: If no evaluator is registered for the family
        """
        tag = family.value if isinstance(family, ActionFamily) else family
        evaluator_class = self._action_families.get(tag)
        if evaluator_class is None:
            raise UnsupportedError(
                f"No evaluator registered for action family '{tag}' "
                f"(import modules.actions to register the built-in families)"
            )
        return evaluator_class

    def missing_action_families(self) -> List[ActionFamily]:
        """Families of the ActionFamily enum that have no registered evaluator."""
        return [family for family in ActionFamily if family.value not in self._action_families]

    # Resistance model methods
    def register_resistance_model(self, name: str, model_class: Type[IResistanceModel]) -> None:
        """Register a resistance model.

        Args:
            name: Unique kind for the model (e.g., "constant", "parallel_rlc")
            model_class: Class implementing IResistanceModel
        """
        self._resistance_models[name] = model_class
        logger.debug(f"Registered resistance model: {name}")

    def get_resistance_model(self, name: str) -> Optional[Type[IResistanceModel]]:
        """Get a resistance model by kind.

        Args:
            name: Model kind

        Returns:
            Model class or None if not found
        """
        return self._resistance_models.get(name)

    def list_resistance_models(self) -> List[str]:
        """List all registered resistance models.

        Returns:
            List of model kinds
        """
        return list(self._resistance_models.keys())

    def resistance_model_for(self, kind: str) -> Type[IResistanceModel]:
        """Resolve a resistance kind as written in a spec string such as 'constant:R=1'.

        Raises:
            ArgumentError: For an unknown kind (the message lists the known ones)
        """
        model_class = self._resistance_models.get(kind)
        if model_class is None:
            known = ", ".join(self._resistance_models)
            raise ArgumentError(f"Unknown resistance kind '{kind}' (known: {known})")
        return model_class

    # Verification suite methods
    def register_verify_suite(self, name: str, suite_class: Type[IVerificationSuite]) -> None:
        """Register a verification suite.

        Args:
            name: Unique suite name (e.g., "riccati")
            suite_class: Class implementing IVerificationSuite
        """
        self._verify_suites[name] = suite_class
        logger.debug(f"Registered verification suite: {name}")

    def get_verify_suite(self, name: str) -> Optional[Type[IVerificationSuite]]:
        """Get a verification suite by name.

        Args:
            name: Suite name

        Returns:
            Suite class or None if not found
        """
        return self._verify_suites.get(name)

    def list_verify_suites(self) -> List[str]:
        """List all registered verification suites, in registration order.

        Returns:
            List of suite names
        """
        return list(self._verify_suites.keys())

    def suites_for(self, selection: str) -> List[Tuple[str, Type[IVerificationSuite]]]:
        """Resolve a --suite selection to the suites it runs.

        Args:
            selection: Suite name or 'all' (every suite in registration order)

        Returns:
            List of (name, suite class) pairs

        Raises:
            ArgumentError: If the suite is not registered
        """
        if selection == ALL_SUITES:
            return list(self._verify_suites.items())
        suite_class = self._verify_suites.get(selection)
        if suite_class is None:
            known = ", ".join(self._verify_suites)
            raise ArgumentError(f"Unknown verification suite '{selection}' (known: {known})")
        return [(selection, suite_class)]

    def clear(self) -> None:
        """Clear all registrations (mainly for testing)."""
        self._action_families.clear()
        self._resistance_models.clear()
        self._verify_suites.clear()
        logger.debug("Plugin registry cleared")
