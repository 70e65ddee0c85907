"""Closed-form actions, zero modes and their evaluators."""

from modules.actions import plugin  # noqa: F401  (registers the action families)
from modules.actions.closed_forms import (
    fermi_action,
    planck_action,
    thermal_action,
    vacuum_action,
)
from modules.actions.zero_modes import (
    fermionic_zero_mode,
    general_zero_mode,
    log_derivative_action,
)

__all__ = [
    'planck_action',
    'thermal_action',
    'vacuum_action',
    'fermi_action',
    'general_zero_mode',
    'log_derivative_action',
    'fermionic_zero_mode',
]
