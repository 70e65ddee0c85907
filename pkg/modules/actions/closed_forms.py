"""Closed-form thermodynamic actions f(x) = U / omega and their derivatives.

All hyperbolic expressions go through the stable kernels so that
|hbar x| up to the exponent limit evaluates without overflow.
"""

import math

from core.interfaces.errors import SingularityError
from modules.numerics.kernels import csch2_half, sech2_half, stable_expm1_ratio


def _singular_at_origin(name: str, x: float) -> None:
    if x == 0.0:
        raise SingularityError(f"{name} action diverges as 1/x at x = 0", x=0.0)


def planck_action(x: float, hbar: float = 1.0) -> float:
    """Planck action f_P(x) = (hbar/2) coth(hbar x / 2).

    Evaluated as hbar/2 + hbar / (e^{hbar x} - 1), the zero-point part plus
    the thermal part.

    Args:
        x: Scaled inverse temperature (non-zero)
        hbar: Action unit

    Returns:
        Action value, odd in x

    Raises:
        SingularityError: If x == 0
    """
    _singular_at_origin("Planck", x)
    return 0.5 * hbar + hbar * stable_expm1_ratio(hbar * x)


def planck_derivative(x: float, hbar: float = 1.0) -> float:
    """d f_P / dx = -(hbar^2 / 4) csch^2(hbar x / 2)."""
    _singular_at_origin("Planck", x)
    return -0.25 * hbar * hbar * csch2_half(hbar * x)


def thermal_action(x: float, hbar: float = 1.0) -> float:
    """Pure thermal action f_T(x) = hbar / (e^{hbar x} - 1).

    Raises:
        SingularityError: If x == 0
    """
    _singular_at_origin("Thermal", x)
    return hbar * stable_expm1_ratio(hbar * x)


def thermal_derivative(x: float, hbar: float = 1.0) -> float:
    """d f_T / dx, equal to the Planck derivative since f_P - f_T is constant."""
    _singular_at_origin("Thermal", x)
    return -0.25 * hbar * hbar * csch2_half(hbar * x)


def vacuum_action(hbar: float = 1.0) -> float:
    """Constant vacuum action f_V = hbar / 2."""
    return 0.5 * hbar


def fermi_action(x: float, hbar: float = 1.0) -> float:
    """Fermi-Dirac action f_s(x) = -hbar/2 + hbar / (e^{-hbar x} + 1) = (hbar/2) tanh(hbar x / 2).

    Bounded by hbar/2 in magnitude and regular everywhere.
    """
    return 0.5 * hbar * math.tanh(0.5 * hbar * x)


def fermi_derivative(x: float, hbar: float = 1.0) -> float:
    """d f_s / dx = (hbar^2 / 4) sech^2(hbar x / 2)."""
    return 0.25 * hbar * hbar * sech2_half(hbar * x)
