"""Darboux machinery: Riccati residuals, I0, lambda validation and the one-parameter families."""

from modules import actions  # noqa: F401  (closed-form seeds must be registered first)
from modules.darboux import plugin  # noqa: F401  (registers the darboux family)
from modules.darboux.family import (
    DarbouxFamily,
    build_family,
    darboux_action,
    transformed_potential,
    transformed_zero_mode,
    v_function,
)
from modules.darboux.integrals import I0Mode, i0_integral
from modules.darboux.riccati import (
    bernoulli_residual,
    bosonic_residual,
    fermionic_partner,
    fermionic_residual,
    residual_report,
)
from modules.darboux.validation import validate_lambda
from modules.darboux.convergence import lambda_convergence_report

__all__ = [
    'DarbouxFamily',
    'build_family',
    'darboux_action',
    'transformed_potential',
    'transformed_zero_mode',
    'v_function',
    'I0Mode',
    'i0_integral',
    'bosonic_residual',
    'fermionic_residual',
    'bernoulli_residual',
    'fermionic_partner',
    'residual_report',
    'validate_lambda',
    'lambda_convergence_report',
]
