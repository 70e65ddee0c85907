"""Tests for the zero-mode integral I0."""

import math

import pytest

from core.interfaces.errors import NumericOverflowError, UnsupportedError
from core.models.action import ZeroMode
from modules.darboux.integrals import (
    I0Mode,
    default_i0_mode,
    i0_integral,
    log_abs_shifted_i0,
    shifted_i0,
)

HBAR_VALUES = [0.5, 1.0, 2.0]


class TestI0Integral:
    """Test cases for i0_integral."""

    @pytest.mark.parametrize("hbar", HBAR_VALUES)
    def test_vacuum_closed_form(self, hbar):
        """Test I0 = W^2 A^2 (e^{hbar x} - 1) / hbar."""
        mode = ZeroMode.vacuum(hbar=hbar, scale=2.0, A=1.5)
        for x in [-3.0, 0.5, 4.0]:
            expected = 4.0 * 2.25 * math.expm1(hbar * x) / hbar
            assert i0_integral(mode, x) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("hbar", HBAR_VALUES)
    def test_planck_closed_form(self, hbar):
        """Test I0 = (sinh(hbar x) - hbar x) / (2 hbar)."""
        mode = ZeroMode.planck(hbar=hbar)
        for x in [0.5, 3.0, -2.0]:
            u = hbar * x
            assert i0_integral(mode, x) == pytest.approx((math.sinh(u) - u) / (2 * hbar), rel=1e-12)

    def test_planck_small_argument_keeps_precision(self):
        """Test the series branch against u^3 / 12 for tiny u."""
        assert i0_integral(ZeroMode.planck(), 1e-6) == pytest.approx(1e-18 / 12.0, rel=1e-12)

    @pytest.mark.parametrize("mode", [ZeroMode.planck(hbar=1.0), ZeroMode.vacuum(hbar=2.0)])
    def test_quadrature_agrees_with_closed_form(self, mode):
        """Test closed form against quadrature, relative to max(1, |I0|)."""
        for x in [-5.0, -0.3, 0.7, 5.0]:
            closed = i0_integral(mode, x, I0Mode.CLOSED_FORM)
            quad = i0_integral(mode, x, I0Mode.QUADRATURE)
            assert abs(closed - quad) <= 1e-9 * max(1.0, abs(closed))

    def test_symmetric_mode_uses_quadrature(self):
        """Test I0 of cosh(x/2), which has no closed form here."""
        mode = ZeroMode.symmetric()
        assert default_i0_mode(mode) is I0Mode.QUADRATURE
        for x in [-3.0, 2.0]:
            assert i0_integral(mode, x) == pytest.approx(0.5 * (math.sinh(x) + x), rel=1e-10)
        with pytest.raises(UnsupportedError):
            i0_integral(mode, 1.0, I0Mode.CLOSED_FORM)

    def test_zero_at_origin(self):
        """Test I0(0) = 0."""
        assert i0_integral(ZeroMode.general(0.3, 0.9), 0.0) == 0.0

    def test_shifted_vacuum_keeps_precision(self):
        """Test the regrouped I0 + lambda near its zero for x < 0."""
        mode = ZeroMode.vacuum(hbar=1.0)
        x = -30.0
        assert shifted_i0(mode, x, 1.0) == pytest.approx(math.exp(x), rel=1e-14)


class TestLogShiftedI0:
    """Test cases for ln|I0 + lambda| beyond the exponent range."""

    def test_matches_direct_value_in_range(self):
        """Test agreement with shifted_i0 where the direct value is finite."""
        mode = ZeroMode.planck()
        for x in [0.5, 3.0, 40.0]:
            log_d, sign = log_abs_shifted_i0(mode, x, 2.0)
            assert sign == 1.0
            assert log_d == pytest.approx(math.log(shifted_i0(mode, x, 2.0)), rel=1e-13)

    def test_direct_integral_overflows(self):
        """Test that I0 itself is reported as unrepresentable at x = 800."""
        with pytest.raises(NumericOverflowError):
            i0_integral(ZeroMode.vacuum(), 800.0)

    @pytest.mark.parametrize("x", [720.0, 800.0])
    def test_vacuum_leading_exponential(self, x):
        """Test ln(I0 + lambda) = hbar x - ln(hbar) for the vacuum mode."""
        for hbar in HBAR_VALUES:
            log_d, sign = log_abs_shifted_i0(ZeroMode.vacuum(hbar), x / hbar, 2.0)
            assert sign == 1.0
            assert log_d == pytest.approx(x - math.log(hbar), rel=1e-14)

    @pytest.mark.parametrize("x", [720.0, 800.0])
    def test_planck_is_odd_in_sign(self, x):
        """Test ln|I0| = |x| - 2 ln 2 with the sign of x for the Planck mode."""
        mode = ZeroMode.planck()
        assert log_abs_shifted_i0(mode, x, 2.0) == pytest.approx((x - 2.0 * math.log(2.0), 1.0))
        assert log_abs_shifted_i0(mode, -x, 2.0) == pytest.approx((x - 2.0 * math.log(2.0), -1.0))

    def test_vacuum_fermionic_branch_underflow(self):
        """Test lambda = 1/hbar, where I0 + lambda = e^{hbar x} / hbar is below the float range."""
        log_d, sign = log_abs_shifted_i0(ZeroMode.vacuum(), -800.0, 1.0)
        assert (log_d, sign) == (-800.0, 1.0)
