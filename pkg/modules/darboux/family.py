"""One-parameter Darboux families of thermodynamic actions.

Given a seed action f_p = w'/w, every lambda with I0(x) + lambda != 0 on the
domain gives another solution of the same fermionic Riccati equation:

    f_g(x; lambda) = f_p(x) - w(x)^2 / (I0(x) + lambda)

lambda = +inf reproduces the seed. All derivatives are analytic.
"""

import logging
import math
from typing import Optional, Tuple

from core.interfaces.action import IActionEvaluator
from core.interfaces.errors import (
    ArgumentError,
    DomainError,
    LambdaValidationError,
    NodeError,
    SingularityError,
    UnsupportedError,
)
from core.models.action import (
    DARBOUX_SEEDS,
    LAMBDA_INFINITY,
    ActionFamily,
    ActionModel,
    ZeroMode,
    format_lambda,
    is_seed_lambda,
)
from core.models.config import NumericsConfig
from core.models.results import LambdaValidation
from modules.actions.zero_modes import (
    log_abs_zero_mode,
    log_derivative_action,
    signed_log_zero_mode,
    zero_mode_values,
)
from modules.darboux.integrals import (
    CLOSED_FORM_FAMILIES,
    I0Mode,
    default_i0_mode,
    i0_integral,
    log_abs_shifted_i0,
    shifted_i0,
)
from modules.darboux.riccati import fermionic_partner
from modules.darboux.validation import validate_lambda
from modules.numerics.kernels import EXP_LIMIT, signed_exp

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]


class DarbouxFamily(IActionEvaluator):
    """Member f_g(.; lambda) of the Darboux family grown from a seed action.

    Instances are immutable; use with_lambda() to move along the family.
    """

    def __init__(
        self,
        seed: ActionModel,
        seed_mode: ZeroMode,
        lam: float = LAMBDA_INFINITY,
        x_domain: Interval = (-math.inf, math.inf),
        i0_mode: Optional[I0Mode] = None,
        validation: Optional[LambdaValidation] = None,
        numerics: Optional[NumericsConfig] = None
    ):
        """Create a family member without scanning the domain.

        Args:
            seed: Seed action (planck, vacuum, fermi_symmetric or general_zero_mode)
            seed_mode: Zero mode whose logarithmic derivative is the seed
            lam: Darboux parameter (+inf is the seed itself)
            x_domain: Interval on which evaluation is allowed
            i0_mode: closed_form or quadrature (None picks the default)
            validation: Report of the lambda scan, if one was run
            numerics: Quadrature settings

        Raises:
            ArgumentError: If seed and zero mode do not match
            UnsupportedError: For seeds without a zero mode or an unavailable closed form
        """
        if seed.family not in DARBOUX_SEEDS:
            raise UnsupportedError(f"'{seed.family.value}' cannot seed a Darboux family")
        if seed.zero_mode(seed_mode.scale) != seed_mode:
            raise ArgumentError(f"Zero mode {seed_mode} does not generate the {seed.name} action")
        if math.isnan(lam):
            raise ArgumentError("Darboux parameter must not be NaN")

        resolved = I0Mode(i0_mode) if i0_mode is not None else default_i0_mode(seed_mode)
        if resolved is I0Mode.CLOSED_FORM and seed_mode.family not in CLOSED_FORM_FAMILIES:
            raise UnsupportedError(
                f"closed_form I0 is only available for planck and vacuum seeds, "
                f"not {seed_mode.family.value}"
            )

        self._seed = seed
        self._seed_mode = seed_mode
        self._lam = lam
        self._x_domain = (float(x_domain[0]), float(x_domain[1]))
        self._i0_mode = resolved
        self._validation = validation
        self._numerics = numerics or NumericsConfig()

    @classmethod
    def unchecked(
        cls,
        seed: ActionModel,
        lam: float = LAMBDA_INFINITY,
        scale: float = 1.0,
        allow_negative_x: bool = False,
        i0_mode: Optional[I0Mode] = None
    ) -> "DarbouxFamily":
        """Family member on the natural domain of its seed, with no lambda scan.

        Poles of 1/(I0 + lambda) surface as SingularityError at evaluation time.
        """
        lo = 0.0 if seed.family is ActionFamily.PLANCK and not allow_negative_x else -math.inf
        return cls(seed, seed.zero_mode(scale), lam, (lo, math.inf), i0_mode)

    # Properties

    @property
    def seed(self) -> ActionModel:
        return self._seed

    @property
    def seed_mode(self) -> ZeroMode:
        return self._seed_mode

    @property
    def lam(self) -> float:
        return self._lam

    @property
    def x_domain(self) -> Interval:
        return self._x_domain

    @property
    def i0_mode(self) -> I0Mode:
        return self._i0_mode

    @property
    def validation(self) -> Optional[LambdaValidation]:
        return self._validation

    @property
    def hbar(self) -> float:
        return self._seed.hbar

    @property
    def is_seed(self) -> bool:
        """True for the lambda = +inf member."""
        return is_seed_lambda(self._lam)

    @property
    def name(self) -> str:
        return f"darboux[{self._seed.family.value}, lambda={format_lambda(self._lam)}]"

    def with_lambda(self, lam: float, strict: bool = False, grid_density: Optional[int] = None) -> "DarbouxFamily":
        """Validated family member with another lambda on the same domain."""
        return build_family(
            self._seed,
            lam,
            self._x_domain,
            scale=self._seed_mode.scale,
            grid_density=grid_density or self._numerics.validation_grid_density,
            strict=strict,
            i0_mode=self._i0_mode,
            allow_negative_x=True,
            numerics=self._numerics,
        )

    # Evaluation

    def contains(self, x: float) -> bool:
        """Check whether x lies in the validated domain."""
        lo, hi = self._x_domain
        return lo <= x <= hi

    def _check_domain(self, x: float) -> None:
        if not self.contains(x):
            lo, hi = self._x_domain
            raise DomainError(f"x = {x!r} is outside the domain [{lo}, {hi}] of {self.name}", x=x)

    def i0(self, x: float) -> float:
        """I0(x) of the seed zero mode."""
        return i0_integral(
            self._seed_mode, x, self._i0_mode,
            tol=self._numerics.quad_tolerance, limit=self._numerics.quad_limit
        )

    def denominator(self, x: float) -> float:
        """I0(x) + lambda at a finite-lambda point."""
        return shifted_i0(
            self._seed_mode, x, self._lam, self._i0_mode,
            tol=self._numerics.quad_tolerance, limit=self._numerics.quad_limit
        )

    def _terms(self, x: float) -> Tuple[float, float, float]:
        """Return (w, w', I0 + lambda) at a finite-lambda point."""
        self._check_domain(x)
        w, w_prime = zero_mode_values(self._seed_mode, x)
        if w == 0.0:
            raise NodeError(f"Seed zero mode of {self.name} vanishes at x = {x!r}", x=x)
        denominator = self.denominator(x)
        if denominator == 0.0:
            raise SingularityError(f"I0(x) + lambda vanishes at x = {x!r} for {self.name}", x=x)
        return w, w_prime, denominator

    def _beyond_limit(self, x: float) -> bool:
        return abs(self._seed_mode.hbar * x) > EXP_LIMIT

    def _log_terms(self, x: float) -> Tuple[float, float, float, float]:
        """Return (ln|w|, sign of w, ln|I0 + lambda|, sign of I0 + lambda)."""
        self._check_domain(x)
        log_w, sign_w = signed_log_zero_mode(self._seed_mode, x)
        log_d, sign_d = log_abs_shifted_i0(
            self._seed_mode, x, self._lam, self._i0_mode,
            tol=self._numerics.quad_tolerance, limit=self._numerics.quad_limit
        )
        if sign_d == 0.0:
            raise SingularityError(f"I0(x) + lambda vanishes at x = {x!r} for {self.name}", x=x)
        return log_w, sign_w, log_d, sign_d

    def _tail_ratio(self, x: float) -> Tuple[float, float]:
        """Return (w^2 / (I0 + lambda), w'/w) for |hbar x| beyond the exponent limit.

        Both factors are formed from logarithms; far out the ratio tends to hbar
        wherever I0 grows exponentially, so members approach f_p - hbar.
        """
        log_w, _, log_d, sign_d = self._log_terms(x)
        return signed_exp(2.0 * log_w - log_d, sign_d), log_derivative_action(self._seed_mode, x)

    def value(self, x: float) -> float:
        """f_g(x; lambda) = f_p(x) - w^2 / (I0 + lambda)."""
        if self.is_seed:
            self._check_domain(x)
            return self._seed.value(x)
        if self._beyond_limit(x):
            q, _ = self._tail_ratio(x)
            return self._seed.value(x) - q
        w, _, denominator = self._terms(x)
        return self._seed.value(x) - w * w / denominator

    def derivative(self, x: float) -> float:
        """f_g' = f_p' - 2 w w' / (I0 + lambda) + (w^2 / (I0 + lambda))^2."""
        if self.is_seed:
            self._check_domain(x)
            return self._seed.derivative(x)
        if self._beyond_limit(x):
            q, slope = self._tail_ratio(x)
            return self._seed.derivative(x) - 2.0 * q * slope + q * q
        w, w_prime, denominator = self._terms(x)
        q = w * w / denominator
        return self._seed.derivative(x) - 2.0 * w * w_prime / denominator + q * q

    def seed_potential(self, x: float) -> float:
        """Bosonic potential V1 = (hbar/2)^2 of the seed."""
        return self._seed_mode.potential

    def partner_potential(self, x: float) -> float:
        """Fermionic partner V2 of the seed, shared by every member."""
        self._check_domain(x)
        return fermionic_partner(self._seed, x)

    def potential(self, x: float) -> float:
        """V1,g = V1 - 2 d^2/dx^2 ln(I0 + lambda) = V1 - 4 w w' / D + 2 (w^2 / D)^2."""
        if self.is_seed:
            self._check_domain(x)
            return self._seed_mode.potential
        if self._beyond_limit(x):
            q, slope = self._tail_ratio(x)
            return self._seed_mode.potential - 4.0 * q * slope + 2.0 * q * q
        w, w_prime, denominator = self._terms(x)
        q = w * w / denominator
        return self._seed_mode.potential - 4.0 * w * w_prime / denominator + 2.0 * q * q

    def transformed_zero_mode(self, x: float) -> float:
        """w(x; lambda) = w(x) / (I0 + lambda).

        For lambda = +inf this returns w(x) itself, the limit of lambda * w(x; lambda).
        """
        if self.is_seed:
            self._check_domain(x)
            w, _ = zero_mode_values(self._seed_mode, x)
            return w
        if self._beyond_limit(x):
            log_w, sign_w, log_d, sign_d = self._log_terms(x)
            return signed_exp(log_w - log_d, sign_w * sign_d)
        w, _, denominator = self._terms(x)
        return w / denominator

    def log_abs_transformed_zero_mode(self, x: float) -> float:
        """ln|w(x; lambda)| evaluated without forming w."""
        self._check_domain(x)
        log_w = log_abs_zero_mode(self._seed_mode, x)
        if self.is_seed:
            return log_w
        log_d, sign_d = log_abs_shifted_i0(
            self._seed_mode, x, self._lam, self._i0_mode,
            tol=self._numerics.quad_tolerance, limit=self._numerics.quad_limit
        )
        if sign_d == 0.0:
            raise SingularityError(f"I0(x) + lambda vanishes at x = {x!r} for {self.name}", x=x)
        return log_w - log_d

    def v(self, x: float) -> float:
        """Bernoulli function v(x) = (I0 + lambda) / w^2; +inf for the seed member."""
        if self.is_seed:
            self._check_domain(x)
            return math.inf
        if self._beyond_limit(x):
            log_w, _, log_d, sign_d = self._log_terms(x)
            return signed_exp(log_d - 2.0 * log_w, sign_d)
        w, _, denominator = self._terms(x)
        return denominator / (w * w)


def build_family(
    seed: ActionModel,
    lam: float,
    domain: Interval,
    scale: float = 1.0,
    grid_density: Optional[int] = None,
    strict: bool = False,
    i0_mode: Optional[I0Mode] = None,
    allow_negative_x: bool = False,
    numerics: Optional[NumericsConfig] = None
) -> DarbouxFamily:
    """Construct a validated Darboux family member.

    Args:
        seed: Seed action model
        lam: Darboux parameter
        domain: Bounded evaluation interval
        scale: Zero-mode normalization (inert in every action value)
        grid_density: Scan points for the lambda validation
        strict: Require lambda > 0 in addition to the scan
        i0_mode: closed_form or quadrature
        allow_negative_x: Admit x <= 0 for the Planck seed
        numerics: Quadrature and scan settings

    Returns:
        DarbouxFamily valid on the domain

    Raises:
        LambdaValidationError: If I0 + lambda vanishes on the domain (carries the report)
        DomainError: If a Planck-seed domain reaches x <= 0 without allow_negative_x
        UnsupportedError: If the seed has no zero mode
    """
    numerics = numerics or NumericsConfig()
    density = grid_density or numerics.validation_grid_density
    if seed.family is ActionFamily.PLANCK and not allow_negative_x and domain[0] <= 0:
        raise DomainError(
            f"Planck-seed family is defined on x > 0 (domain starts at {domain[0]}); "
            f"enable allow_negative_x to evaluate the x < 0 branch",
            x=domain[0],
        )

    family = DarbouxFamily(seed, seed.zero_mode(scale), lam, domain, i0_mode, numerics=numerics)
    report = validate_lambda(
        seed, family.seed_mode, lam, domain,
        grid_density=density, strict=strict, i0_mode=family.i0_mode
    )
    if not report.valid:
        raise LambdaValidationError(f"Invalid lambda = {format_lambda(lam)}: {report.reason}", report)

    logger.info(f"Built {family.name} on [{domain[0]}, {domain[1]}] (i0_mode={family.i0_mode.value})")
    return DarbouxFamily(seed, family.seed_mode, lam, domain, family.i0_mode, report, numerics)


def v_function(family: DarbouxFamily, x: float) -> float:
    """Bernoulli function (I0 + lambda) / w^2, solving v' + 2 v f_p = 1."""
    return family.v(x)


def darboux_action(family: DarbouxFamily, x: float) -> float:
    """Family member f_g(x; lambda)."""
    return family.value(x)


def transformed_potential(family: DarbouxFamily, x: float) -> float:
    """Bosonic potential V1,g with f_g' + f_g^2 = V1,g."""
    return family.potential(x)


def transformed_zero_mode(family: DarbouxFamily, x: float) -> float:
    """Zero mode w / (I0 + lambda) of V1,g."""
    return family.transformed_zero_mode(x)
