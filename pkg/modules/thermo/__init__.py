"""Thermodynamic observables: energy, entropy, kink asymptotics and temperature sign."""

from modules import darboux  # noqa: F401  (action families must be registered)
from modules.thermo.observables import (
    entropy,
    entropy_derivative_check,
    entropy_profile,
    internal_energy,
)
from modules.thermo.kink import kink_profile
from modules.thermo.temperature import bath_roles, hotter, temperature_sign_map

__all__ = [
    'internal_energy',
    'entropy',
    'entropy_profile',
    'entropy_derivative_check',
    'kink_profile',
    'temperature_sign_map',
    'hotter',
    'bath_roles',
]
