"""Nyquist-Johnson noise spectra and resistance models."""

from modules import darboux  # noqa: F401  (action families must be registered)
from modules.noise import plugin  # noqa: F401  (registers the resistance models)
from modules.noise.resistance import (
    ConstantResistance,
    ParallelRLCResistance,
    parse_resistance_spec,
    resistance,
)
from modules.noise.spectrum import darboux_power, nyquist_power, spectrum_sweep

__all__ = [
    'ConstantResistance',
    'ParallelRLCResistance',
    'parse_resistance_spec',
    'resistance',
    'nyquist_power',
    'darboux_power',
    'spectrum_sweep',
]
