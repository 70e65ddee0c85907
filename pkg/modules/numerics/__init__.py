"""Numerical kernels: quadrature, finite differences, stable exponentials, sign scans."""

from modules.numerics.kernels import stable_expm1_ratio
from modules.numerics.quadrature import integrate_adaptive
from modules.numerics.differences import (
    derivative_central,
    derivative_richardson,
    second_derivative_central,
)
from modules.numerics.scanning import scan_sign_change, linear_grid, log_grid

__all__ = [
    'stable_expm1_ratio',
    'integrate_adaptive',
    'derivative_central',
    'derivative_richardson',
    'second_derivative_central',
    'scan_sign_change',
    'linear_grid',
    'log_grid',
]
