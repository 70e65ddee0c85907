"""Tests for the Nyquist-Johnson spectrum and its Darboux generalization."""

import math

import pytest

from core.interfaces.errors import ArgumentError, LambdaValidationError
from core.models.action import ActionFamily, ActionModel
from core.models.results import TemperatureRegime
from modules.darboux.family import build_family
from modules.noise.resistance import ConstantResistance, ParallelRLCResistance
from modules.noise.spectrum import darboux_power, nyquist_power, regime_of, spectrum_sweep


class TestNyquistPower:
    """Test cases for nyquist_power."""

    def test_classical_limit(self):
        """Test P -> R T / pi when beta omega << 1."""
        model = ConstantResistance(3.0)
        for beta in [0.5, 1.0, 2.0]:
            assert nyquist_power(1e-4, beta, model) == pytest.approx(3.0 / (math.pi * beta), rel=1e-6)

    def test_zero_point_limit(self):
        """Test P -> omega R hbar / (2 pi) when beta omega >> 1."""
        model = ConstantResistance(3.0)
        for hbar in [0.5, 1.0]:
            expected = 40.0 * 3.0 * hbar / (2.0 * math.pi)
            assert nyquist_power(40.0, 1.0 / hbar * 2.0, model, hbar) == pytest.approx(expected, rel=1e-12)

    def test_darboux_seed_member_matches(self):
        """Test that the lambda = +inf Planck member reproduces nyquist_power exactly."""
        model = ParallelRLCResistance(100.0, 10.0, 0.1)
        family = build_family(ActionModel.planck(), math.inf, (0.1, 10.0))
        for omega in [0.1, 0.7, 1.0, 4.0]:
            assert darboux_power(omega, 2.0, family, model) == nyquist_power(omega, 2.0, model)


class TestRegime:
    """Test cases for regime_of."""

    def test_regimes(self):
        """Test that negative x or negative power is fermionic."""
        assert regime_of(1.0, 2.0) == TemperatureRegime.POSITIVE_T_BOSON.value
        assert regime_of(-1.0, 2.0) == TemperatureRegime.NEGATIVE_T_FERMION.value
        assert regime_of(1.0, -2.0) == TemperatureRegime.NEGATIVE_T_FERMION.value


class TestSpectrumSweep:
    """Test cases for spectrum_sweep."""

    @pytest.fixture
    def model(self):
        """Unit constant resistance."""
        return ConstantResistance(1.0)

    def test_ordering(self, model):
        """Test records ordered by omega, then lambda with +inf last."""
        table = spectrum_sweep([2.0, 0.5, 1.0], 1.0, [math.inf, 4.0, 2.0], model)
        assert len(table) == 9
        keys = [(r.omega, r.lam) for r in table.records]
        assert keys == sorted(keys)
        assert [r.lam for r in table.records[:3]] == [2.0, 4.0, math.inf]
        assert table.seed == "planck"
        assert table.resistance_kind == "constant"

    def test_reference_series(self, model):
        """Test include_reference adds lambda = +inf once."""
        table = spectrum_sweep([0.5, 1.0], 1.0, [2.0], model, include_reference=True)
        reference = table.for_lambda(math.inf)
        assert len(reference) == 2
        for record in reference:
            assert record.power == nyquist_power(record.omega, 1.0, model)
            assert record.regime == TemperatureRegime.POSITIVE_T_BOSON.value

    def test_vacuum_member_is_fermionic(self, model):
        """Test that the lambda = 2 vacuum member gives negative power."""
        table = spectrum_sweep([0.5, 1.0, 4.0], 1.0, [2.0], model, seed=ActionFamily.VACUUM)
        for record in table.records:
            expected = record.omega / math.pi * -0.5 * math.tanh(0.5 * record.omega)
            assert record.power == pytest.approx(expected, rel=1e-10)
            assert record.regime == TemperatureRegime.NEGATIVE_T_FERMION.value

    def test_rows(self, model):
        """Test row layout."""
        table = spectrum_sweep([1.0], 2.0, [math.inf], model)
        omega, beta, lam, r, power, regime = table.rows()[0]
        assert (omega, beta, lam, r) == (1.0, 2.0, math.inf, 1.0)
        assert power == nyquist_power(1.0, 2.0, model)
        assert table.to_dict()["columns"] == ["omega", "beta", "lambda", "R", "P", "regime"]

    def test_invalid_lambda_rejects_sweep(self, model):
        """Test that one invalid lambda rejects the whole sweep."""
        with pytest.raises(LambdaValidationError):
            spectrum_sweep([0.1, 1.0, 10.0], 1.0, [2.0, -10.0], model)

    @pytest.mark.parametrize("omegas,beta", [([], 1.0), ([0.0, 1.0], 1.0), ([1.0], 0.0)])
    def test_bad_arguments(self, model, omegas, beta):
        """Test that empty or non-positive omega grids and beta = 0 are rejected."""
        with pytest.raises(ArgumentError):
            spectrum_sweep(omegas, beta, [math.inf], model)
