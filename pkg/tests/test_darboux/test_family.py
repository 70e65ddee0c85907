"""Tests for Darboux families."""

import math

import pytest

from core.interfaces.errors import (
    ArgumentError,
    DomainError,
    LambdaValidationError,
    UnsupportedError,
)
from core.models.action import ActionFamily, ActionModel, ZeroMode
from modules.actions.closed_forms import planck_action
from modules.darboux.family import (
    DarbouxFamily,
    build_family,
    darboux_action,
    transformed_potential,
    transformed_zero_mode,
    v_function,
)
from modules.darboux.integrals import I0Mode
from modules.darboux.riccati import bosonic_residual, fermionic_residual
from modules.numerics.differences import derivative_richardson, second_derivative_central

HBAR_VALUES = [0.5, 1.0, 2.0]


def vacuum_closed_form(x, lam, hbar):
    e = math.exp(hbar * x)
    return 0.5 * hbar - hbar * e / (e - 1.0 + hbar * lam)


class TestBuildFamily:
    """Test cases for build_family."""

    def test_seed_member_reproduces_seed(self):
        """Test that lambda = +inf returns the seed bit for bit."""
        family = build_family(ActionModel.planck(), math.inf, (0.1, 10.0))
        assert family.is_seed
        for x in [0.1, 1.0, 10.0]:
            assert family.value(x) == planck_action(x)
            assert family.potential(x) == 0.25
            assert family.v(x) == math.inf

    def test_invalid_lambda_raises_with_report(self):
        """Test that a forbidden lambda raises LambdaValidationError with its report."""
        with pytest.raises(LambdaValidationError) as excinfo:
            build_family(ActionModel.vacuum(), 0.5, (-2.0, 2.0))
        report = excinfo.value.report
        assert not report.valid
        a, b = report.brackets[0]
        assert a <= -0.693 <= b

    def test_planck_domain_must_be_positive(self):
        """Test that the Planck seed is confined to x > 0 by default."""
        with pytest.raises(DomainError):
            build_family(ActionModel.planck(), 2.0, (0.0, 1.0))

    def test_planck_negative_branch_opt_in(self):
        """Test that allow_negative_x admits x < 0 for the Planck seed."""
        family = build_family(ActionModel.planck(), 10.0, (-3.0, -0.5), allow_negative_x=True)
        assert math.isfinite(family.value(-1.0))

    def test_strict_mode(self):
        """Test that strict mode rejects lambda = 0."""
        with pytest.raises(LambdaValidationError):
            build_family(ActionModel.planck(), 0.0, (0.1, 1.0), strict=True)
        assert build_family(ActionModel.planck(), 0.0, (0.1, 1.0)).validation.boundary_degenerate

    def test_outside_domain(self):
        """Test that evaluation outside the validated domain raises DomainError."""
        family = build_family(ActionModel.vacuum(), 2.0, (0.0, 1.0))
        with pytest.raises(DomainError):
            family.value(2.0)

    def test_thermal_cannot_seed(self):
        """Test that seeds without a zero mode are rejected."""
        with pytest.raises(UnsupportedError):
            build_family(ActionModel.thermal(), 1.0, (0.1, 1.0))

    def test_closed_form_only_for_planck_and_vacuum(self):
        """Test that the symmetric seed cannot use closed_form I0."""
        with pytest.raises(UnsupportedError):
            build_family(ActionModel.fermi_symmetric(), 10.0, (-1.0, 1.0), i0_mode=I0Mode.CLOSED_FORM)

    def test_mismatched_zero_mode(self):
        """Test that the seed and its zero mode must agree."""
        with pytest.raises(ArgumentError):
            DarbouxFamily(ActionModel.planck(), ZeroMode.vacuum())


class TestVacuumFamily:
    """Test cases for the vacuum-seeded family."""

    @pytest.mark.parametrize("hbar", HBAR_VALUES)
    @pytest.mark.parametrize("lam", [1.5, 2.0, 10.0, 1000.0])
    def test_closed_form(self, hbar, lam):
        """Test f_gV = hbar/2 - hbar e^{hbar x} / (e^{hbar x} - 1 + hbar lambda)."""
        scaled = lam / hbar
        family = build_family(ActionModel.vacuum(hbar), scaled, (-10.0, 10.0))
        for x in [-10.0, -1.0, 0.0, 0.5, 3.0, 10.0]:
            assert family.value(x) == pytest.approx(vacuum_closed_form(x, scaled, hbar), abs=1e-12)

    @pytest.mark.parametrize("hbar", HBAR_VALUES)
    def test_lambda_one_over_hbar_is_fermionic_branch(self, hbar):
        """Test f_gV = -hbar/2 everywhere for lambda = 1/hbar."""
        family = build_family(ActionModel.vacuum(hbar), 1.0 / hbar, (-5.0, 5.0))
        for x in [-5.0, 0.0, 2.0, 5.0]:
            assert family.value(x) == pytest.approx(-0.5 * hbar, abs=1e-12)

    @pytest.mark.parametrize("hbar", HBAR_VALUES)
    def test_lambda_two_over_hbar_is_minus_fermi(self, hbar):
        """Test f_gV = -(hbar/2) tanh(hbar x / 2) for lambda = 2/hbar."""
        family = build_family(ActionModel.vacuum(hbar), 2.0 / hbar, (-5.0, 5.0))
        for x in [-5.0, -0.5, 0.0, 3.0]:
            assert family.value(x) == pytest.approx(-0.5 * hbar * math.tanh(0.5 * hbar * x), abs=1e-12)

    def test_sign_at_positive_x(self):
        """Test that f_gV < 0 for x > 0 when lambda = 2."""
        family = build_family(ActionModel.vacuum(), 2.0, (0.1, 5.0))
        assert all(family.value(x) < 0 for x in [0.1, 1.0, 5.0])


class TestFarTail:
    """Test cases for members evaluated where e^{hbar x} overflows."""

    @pytest.mark.parametrize("x", [720.0, 800.0, -720.0, -800.0])
    def test_vacuum_lambda_two_follows_tanh(self, x):
        """Test f_gV = -(1/2) tanh(x/2) at |x| beyond the exponent range."""
        family = build_family(ActionModel.vacuum(), 2.0, (-800.0, 800.0))
        assert family.value(x) == pytest.approx(-0.5 * math.tanh(0.5 * x), abs=1e-12)

    @pytest.mark.parametrize("x", [720.0, 800.0])
    def test_vacuum_tends_to_fermionic_value(self, x):
        """Test that f_gV approaches -hbar/2 as x grows for any finite lambda."""
        for lam in [1.5, 2.0, 1000.0]:
            family = DarbouxFamily.unchecked(ActionModel.vacuum(), lam)
            assert family.value(x) == pytest.approx(-0.5, abs=1e-12)
            assert family.derivative(x) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("x", [-720.0, -800.0])
    def test_vacuum_fermionic_branch_stays_constant(self, x):
        """Test lambda = 1/hbar where I0 + lambda = e^{hbar x} / hbar underflows."""
        family = build_family(ActionModel.vacuum(), 1.0, (-800.0, 800.0))
        assert family.value(x) == pytest.approx(-0.5, abs=1e-12)

    @pytest.mark.parametrize("x", [720.0, 800.0])
    def test_planck_tail(self, x):
        """Test that the Planck-seeded member tends to hbar/2 - hbar."""
        family = build_family(ActionModel.planck(), 2.0, (0.1, 800.0))
        assert family.value(x) == pytest.approx(-0.5, abs=1e-12)
        assert family.potential(x) == pytest.approx(0.25, abs=1e-12)
        assert family.v(x) == pytest.approx(1.0, rel=1e-12)

    def test_planck_negative_tail(self):
        """Test the x < 0 Planck branch, where I0 + lambda is large and negative."""
        family = DarbouxFamily.unchecked(ActionModel.planck(), 2.0, allow_negative_x=True)
        assert family.value(-720.0) == pytest.approx(0.5, abs=1e-12)

    def test_transformed_zero_mode_is_finite(self):
        """Test w / (I0 + lambda) = e^{-x/2} for the vacuum seed, formed in log space."""
        family = DarbouxFamily.unchecked(ActionModel.vacuum(), 2.0)
        w = family.transformed_zero_mode(720.0)
        assert 0.0 < w < 1e-150
        assert math.log(w) == pytest.approx(-360.0, abs=1e-9)
        assert family.log_abs_transformed_zero_mode(800.0) == pytest.approx(-400.0, abs=1e-9)

    @pytest.mark.parametrize("x", [705.0, -705.0])
    def test_tail_matches_closed_form_at_the_limit(self, x):
        """Test that the log-space branch agrees with direct evaluation where both work."""
        family = DarbouxFamily.unchecked(ActionModel.vacuum(), 1.5)
        assert family.value(x) == pytest.approx(vacuum_closed_form(x, 1.5, 1.0), abs=1e-12)


class TestFamilyIdentities:
    """Riccati identities shared by every family member."""

    @pytest.fixture(params=[
        ("planck", 1.0, (0.1, 10.0)),
        ("planck", 10.0, (0.1, 10.0)),
        ("vacuum", 1.5, (-10.0, 10.0)),
        ("vacuum", 1000.0, (-10.0, 10.0)),
        ("general", 50.0, (-3.0, 3.0)),
    ])
    def family(self, request):
        """Build a validated family member."""
        seed, lam, domain = request.param
        if seed == "general":
            model = ActionModel.general(0.8, 0.3, hbar=1.0)
        else:
            model = ActionModel(ActionFamily(seed), 1.0)
        return build_family(model, lam, domain)

    def _grid(self, family):
        lo, hi = family.x_domain
        return [lo + (hi - lo) * i / 20 for i in range(21)]

    def test_fermionic_invariance(self, family):
        """Test -f_g' + f_g^2 = V2 with the seed's partner potential."""
        for x in self._grid(family):
            residual = fermionic_residual(family, x, family.partner_potential)
            assert abs(residual) <= 1e-8 * max(1.0, abs(family.partner_potential(x)))

    def test_bosonic_self_consistency(self, family):
        """Test f_g' + f_g^2 = V1,g."""
        for x in self._grid(family):
            residual = bosonic_residual(family, x, family.potential)
            assert abs(residual) <= 1e-8 * max(1.0, abs(family.potential(x)))

    def test_analytic_derivative(self, family):
        """Test f_g' against a Richardson difference."""
        lo, hi = family.x_domain
        for x in [lo + 0.25 * (hi - lo), lo + 0.6 * (hi - lo)]:
            assert family.derivative(x) == pytest.approx(derivative_richardson(family.value, x), abs=1e-7)

    def test_v_function_solves_bernoulli(self, family):
        """Test v' + 2 v f_p = 1."""
        lo, hi = family.x_domain
        for x in [lo + 0.3 * (hi - lo), lo + 0.7 * (hi - lo)]:
            v = v_function(family, x)
            slope = derivative_richardson(family.v, x, h=1e-3)
            assert slope + 2.0 * v * family.seed.value(x) == pytest.approx(1.0, rel=1e-6)

    def test_transformed_zero_mode(self, family):
        """Test w'' = V1,g w and w'/w = f_g for w = w_seed / (I0 + lambda)."""
        lo, hi = family.x_domain
        for x in [lo + 0.3 * (hi - lo), lo + 0.55 * (hi - lo)]:
            w = transformed_zero_mode(family, x)
            curvature = second_derivative_central(family.transformed_zero_mode, x, h=1e-3)
            assert curvature == pytest.approx(transformed_potential(family, x) * w, rel=1e-5, abs=1e-7)
            log_slope = derivative_richardson(family.log_abs_transformed_zero_mode, x)
            assert log_slope == pytest.approx(darboux_action(family, x), abs=1e-8)


class TestRegisteredDarbouxModel:
    """Test cases for Darboux models dispatched through the registry."""

    def test_action_model_evaluates_family(self):
        """Test ActionModel.darboux against the closed form."""
        model = ActionModel.darboux(ActionFamily.VACUUM, 2.0)
        assert model.value(1.0) == pytest.approx(vacuum_closed_form(1.0, 2.0, 1.0), abs=1e-14)

    def test_scale_is_inert(self):
        """Test that the zero-mode normalization does not change f_g with lambda rescaled by W^2."""
        a = build_family(ActionModel.vacuum(), 2.0, (-1.0, 1.0))
        b = build_family(ActionModel.vacuum(), 2.0 * 9.0, (-1.0, 1.0), scale=3.0)
        for x in [-1.0, 0.0, 1.0]:
            assert b.value(x) == pytest.approx(a.value(x), abs=1e-14)
