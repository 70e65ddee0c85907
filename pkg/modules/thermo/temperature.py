"""Signed temperature read off x = omega / T and ordering of baths."""

import logging
import math
from typing import Tuple

from core.interfaces.errors import ArgumentError, InfiniteTemperatureError
from core.models.results import TemperatureRegime, TemperatureSign

logger = logging.getLogger(__name__)


def temperature_sign_map(x: float, omega: float) -> TemperatureSign:
    """Map x = omega / T to a signed temperature and its regime.

    Args:
        x: Scaled inverse temperature (non-zero)
        omega: Angular frequency (> 0)

    Returns:
        TemperatureSign with T = omega / x; negative x is the fermionic,
        negative-temperature regime

    Raises:
        ArgumentError: If omega <= 0 or x is not finite
        InfiniteTemperatureError: If x == 0
    """
    if not omega > 0:
        raise ArgumentError(f"omega must be positive, got {omega!r}")
    if not math.isfinite(x):
        raise ArgumentError(f"x must be finite, got {x!r}")
    if x == 0:
        raise InfiniteTemperatureError("x = 0 corresponds to infinite temperature")

    regime = TemperatureRegime.POSITIVE_T_BOSON if x > 0 else TemperatureRegime.NEGATIVE_T_FERMION
    return TemperatureSign(x=x, omega=omega, temperature=omega / x, regime=regime)


def hotter(a: TemperatureSign, b: TemperatureSign) -> TemperatureSign:
    """The hotter of two states: the one with the smaller inverse temperature.

    Every negative-temperature state is hotter than every positive one. Ties
    return a.
    """
    return b if b.beta < a.beta else a


def bath_roles(a: TemperatureSign, b: TemperatureSign) -> Tuple[TemperatureSign, TemperatureSign]:
    """Order two states as (hot bath, cold bath)."""
    hot = hotter(a, b)
    cold = b if hot is a else a
    return hot, cold
