"""Tests for the plugin registry."""

import pytest

from core.interfaces.errors import ArgumentError, UnsupportedError
from core.interfaces.resistance import IResistanceModel
from core.models.action import ActionFamily, ActionModel
from core.registry.plugin_registry import PluginRegistry
from modules.actions.evaluators import PlanckEvaluator
from modules.darboux.evaluator import DarbouxEvaluator
from modules.verify.riccati_suite import RiccatiSuite


class MockResistanceModel(IResistanceModel):
    """Mock resistance model for testing."""

    @classmethod
    def from_config(cls, config):
        return cls()

    def resistance(self, omega, beta):
        return 1.0

    @property
    def kind(self):
        return "mock"

    @property
    def parameters(self):
        return {}


class TestPluginRegistry:
    """Test cases for PluginRegistry."""

    def test_singleton(self):
        """Test that PluginRegistry is a singleton."""
        registry1 = PluginRegistry()
        registry2 = PluginRegistry()
        assert registry1 is registry2

    def test_builtin_action_families(self):
        """Test that importing the modules registers every action family."""
        families = PluginRegistry().list_action_families()
        for name in ["planck", "vacuum", "thermal", "fermi_symmetric", "general_zero_mode", "darboux"]:
            assert name in families
        assert PluginRegistry().get_action_family("planck") is PlanckEvaluator

    def test_register_resistance_model(self):
        """Test registering and retrieving a resistance model."""
        registry = PluginRegistry()
        registry.register_resistance_model("mock", MockResistanceModel)

        assert "mock" in registry.list_resistance_models()
        assert registry.get_resistance_model("mock") is MockResistanceModel

    def test_verify_suites_in_report_order(self):
        """Test that suites are listed in registration order."""
        assert PluginRegistry().list_verify_suites() == ["riccati", "darboux", "limits", "entropy", "fdt"]

    def test_get_nonexistent(self):
        """Test that unknown names return None."""
        registry = PluginRegistry()
        assert registry.get_action_family("nonexistent") is None
        assert registry.get_resistance_model("nonexistent") is None
        assert registry.get_verify_suite("nonexistent") is None

    def test_evaluator_for_family(self):
        """Test lookup by ActionFamily member or by tag."""
        registry = PluginRegistry()
        assert registry.evaluator_for(ActionFamily.PLANCK) is PlanckEvaluator
        assert registry.evaluator_for("darboux") is DarbouxEvaluator
        evaluator = registry.evaluator_for(ActionFamily.PLANCK)(ActionModel.planck())
        assert evaluator.value(1.0) == ActionModel.planck().value(1.0)

    def test_every_family_has_an_evaluator(self):
        """Test that the built-in plugins cover the whole ActionFamily enum."""
        assert PluginRegistry().missing_action_families() == []

    def test_unregistered_family_is_unsupported(self):
        """Test that a family without an evaluator raises UnsupportedError."""
        registry = PluginRegistry()
        registry.clear()
        assert registry.missing_action_families() == list(ActionFamily)
        with pytest.raises(UnsupportedError, match="thermal"):
            registry.evaluator_for(ActionFamily.THERMAL)
        with pytest.raises(UnsupportedError):
            ActionModel.thermal().value(1.0)

    def test_resistance_model_for(self):
        """Test kind lookup and the message for an unknown kind."""
        registry = PluginRegistry()
        model = registry.resistance_model_for("constant").from_config({"R": "2.5"})
        assert model.resistance(1.0, 1.0) == 2.5
        with pytest.raises(ArgumentError, match="known: constant, parallel_rlc"):
            registry.resistance_model_for("inductor")

    def test_suites_for_selection(self):
        """Test that 'all' expands in registration order and a name selects one suite."""
        registry = PluginRegistry()
        names = [name for name, _ in registry.suites_for("all")]
        assert names == ["riccati", "darboux", "limits", "entropy", "fdt"]
        assert registry.suites_for("riccati") == [("riccati", RiccatiSuite)]
        with pytest.raises(ArgumentError, match="Unknown verification suite 'spectral'"):
            registry.suites_for("spectral")

    def test_clear(self):
        """Test clearing the registry."""
        registry = PluginRegistry()
        registry.clear()

        assert registry.list_action_families() == []
        assert registry.list_resistance_models() == []
        assert registry.list_verify_suites() == []
