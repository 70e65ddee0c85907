"""Tests for resistance models."""

import pytest

from core.interfaces.errors import ArgumentError
from modules.noise.resistance import (
    ConstantResistance,
    ParallelRLCResistance,
    parse_resistance_spec,
    resistance,
)


class TestConstantResistance:
    """Test cases for ConstantResistance."""

    def test_frequency_independent(self):
        """Test that R does not depend on omega or beta."""
        model = ConstantResistance(50.0)
        assert resistance(model, 0.1, 1.0) == 50.0
        assert resistance(model, 100.0, -2.0) == 50.0
        assert model.kind == "constant"
        assert model.parameters == {"R": 50.0}

    def test_rejects_non_positive_resistance(self):
        """Test that R <= 0 is rejected."""
        with pytest.raises(ArgumentError):
            ConstantResistance(0.0)

    def test_rejects_non_positive_omega(self):
        """Test that omega <= 0 is rejected."""
        with pytest.raises(ArgumentError):
            resistance(ConstantResistance(1.0), 0.0, 1.0)

    def test_from_config_unknown_key(self):
        """Test that unexpected parameters are rejected."""
        with pytest.raises(ArgumentError):
            ConstantResistance.from_config({"R": 1.0, "L": 2.0})


class TestParallelRLCResistance:
    """Test cases for ParallelRLCResistance."""

    @pytest.fixture
    def model(self):
        """Resonant circuit with omega0 = 1 and Q = 10."""
        return ParallelRLCResistance(R=100.0, L=10.0, C=0.1)

    def test_resonance(self, model):
        """Test omega0 and Q."""
        assert model.omega0 == pytest.approx(1.0)
        assert model.quality_factor == pytest.approx(10.0)

    def test_peak_at_resonance(self, model):
        """Test that R is reached at omega0 and only there."""
        assert model.resistance(1.0, 1.0) == pytest.approx(100.0)
        for omega in [0.5, 0.9, 1.1, 3.0]:
            assert model.resistance(omega, 1.0) < 100.0

    def test_half_power_points(self, model):
        """Test R/2 where Q (omega/omega0 - omega0/omega) = 1."""
        omega = 0.05 + (0.05 ** 2 + 1.0) ** 0.5
        assert model.resistance(omega, 1.0) == pytest.approx(50.0)

    def test_missing_parameter(self):
        """Test that every parameter is required."""
        with pytest.raises(ArgumentError):
            ParallelRLCResistance.from_config({"R": 1.0, "L": 1.0})


class TestParseResistanceSpec:
    """Test cases for parse_resistance_spec."""

    def test_constant(self):
        """Test a constant resistance spec."""
        model = parse_resistance_spec("constant:R=2.5")
        assert isinstance(model, ConstantResistance)
        assert model.parameters == {"R": 2.5}

    def test_parallel_rlc(self):
        """Test a parallel RLC spec with spaces."""
        model = parse_resistance_spec("parallel_rlc: R=100, L=10, C=0.1")
        assert isinstance(model, ParallelRLCResistance)
        assert model.omega0 == pytest.approx(1.0)

    @pytest.mark.parametrize("spec", [
        "inductor:L=1",
        "constant:R",
        "constant:R=abc",
        "constant:R=-1",
        "constant",
    ])
    def test_invalid_specs(self, spec):
        """Test that malformed specs raise ArgumentError."""
        with pytest.raises(ArgumentError):
            parse_resistance_spec(spec)
