"""The accumulated-square integral I0(x) = integral from 0 to x of w(y)^2 dy."""

import logging
import math
from enum import Enum
from typing import Optional, Tuple

from core.interfaces.errors import NumericOverflowError, UnsupportedError
from core.models.action import ZeroMode, ZeroModeFamily
from modules.actions.zero_modes import zero_mode_values
from modules.numerics.kernels import EXP_LIMIT
from modules.numerics.quadrature import DEFAULT_LIMIT, DEFAULT_TOLERANCE, integrate_adaptive

logger = logging.getLogger(__name__)


class I0Mode(str, Enum):
    """How I0 is evaluated."""

    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


CLOSED_FORM_FAMILIES = (ZeroModeFamily.PLANCK, ZeroModeFamily.VACUUM)


def default_i0_mode(mode: ZeroMode) -> I0Mode:
    """Closed form where an antiderivative is implemented, quadrature otherwise."""
    if mode.family in CLOSED_FORM_FAMILIES:
        return I0Mode.CLOSED_FORM
    return I0Mode.QUADRATURE


def _sinh_minus_identity(u: float) -> float:
    """sinh(u) - u without cancellation for small |u|."""
    if abs(u) >= 1.0:
        try:
            return math.sinh(u) - u
        except OverflowError:
            raise NumericOverflowError(f"sinh({u!r}) overflows")
    # series u^3/3! + u^5/5! + ...
    term = u * u * u / 6.0
    total = term
    k = 3
    while abs(term) > 1e-17 * abs(total):
        term *= u * u / ((k + 1) * (k + 2))
        total += term
        k += 2
    return total


def _closed_form(mode: ZeroMode, x: float) -> float:
    hbar = mode.hbar
    weight = mode.scale * mode.scale
    if mode.family is ZeroModeFamily.VACUUM:
        try:
            return weight * mode.A * mode.A * math.expm1(hbar * x) / hbar
        except OverflowError:
            raise NumericOverflowError(f"I0 of the vacuum mode overflows at x = {x!r}")
    if mode.family is ZeroModeFamily.PLANCK:
        return weight * 0.5 * _sinh_minus_identity(hbar * x) / hbar
    raise UnsupportedError(
        f"No closed-form I0 for zero-mode family '{mode.family.value}'; use quadrature"
    )


def i0_integral(
    seed_mode: ZeroMode,
    x: float,
    mode: Optional[I0Mode] = None,
    tol: float = DEFAULT_TOLERANCE,
    limit: int = DEFAULT_LIMIT
) -> float:
    """Signed integral of the squared zero mode from 0 to x.

    Args:
        seed_mode: Zero mode w
        x: Upper limit (negative x gives a negative integral)
        mode: closed_form (planck and vacuum modes only) or quadrature;
            None picks the closed form when available
        tol: Absolute quadrature tolerance
        limit: Quadrature subdivision limit

    Returns:
        I0(x), scaled by scale^2

    Raises:
        UnsupportedError: If closed_form is requested for another family
    """
    if x == 0.0:
        return 0.0
    if mode is None:
        mode = default_i0_mode(seed_mode)

    if I0Mode(mode) is I0Mode.CLOSED_FORM:
        return _closed_form(seed_mode, x)

    def integrand(y: float) -> float:
        w, _ = zero_mode_values(seed_mode, y)
        return w * w

    # The integrand grows like e^{hbar |y|}; a relative target keeps large x reachable
    result = integrate_adaptive(integrand, 0.0, x, tol=tol, rel_tol=1e-13, limit=limit)
    return result.value


def shifted_i0(
    seed_mode: ZeroMode,
    x: float,
    lam: float,
    mode: Optional[I0Mode] = None,
    tol: float = DEFAULT_TOLERANCE,
    limit: int = DEFAULT_LIMIT
) -> float:
    """I0(x) + lambda, the denominator of every family member.

    For the vacuum mode at x < 0 the closed form is regrouped as
    c e^{hbar x} + (lambda - c) with c = W^2 A^2 / hbar, which keeps full
    relative precision when lambda is close to c.
    """
    if mode is None:
        mode = default_i0_mode(seed_mode)
    if I0Mode(mode) is I0Mode.CLOSED_FORM and seed_mode.family is ZeroModeFamily.VACUUM and x < 0:
        c = seed_mode.scale * seed_mode.scale * seed_mode.A * seed_mode.A / seed_mode.hbar
        return c * math.exp(seed_mode.hbar * x) + (lam - c)
    return i0_integral(seed_mode, x, mode, tol, limit) + lam


def _log_abs_i0_tail(seed_mode: ZeroMode, x: float) -> Optional[Tuple[float, float]]:
    """Leading (ln|I0|, sign) for |hbar x| > EXP_LIMIT, or None when I0 stays bounded.

    Beyond the limit the integral is dominated by W^2 A^2 e^{hbar x} / hbar
    (x > 0) or -W^2 B^2 e^{-hbar x} / hbar (x < 0); every other term is
    below double precision relative to it.
    """
    hbar = seed_mode.hbar
    u = hbar * x
    coefficient = seed_mode.A if u > 0 else seed_mode.B
    if coefficient == 0.0:
        return None
    log_i0 = (
        2.0 * math.log(abs(seed_mode.scale))
        + 2.0 * math.log(abs(coefficient))
        + abs(u)
        - math.log(hbar)
    )
    return log_i0, math.copysign(1.0, u)


def log_abs_shifted_i0(
    seed_mode: ZeroMode,
    x: float,
    lam: float,
    mode: Optional[I0Mode] = None,
    tol: float = DEFAULT_TOLERANCE,
    limit: int = DEFAULT_LIMIT
) -> Tuple[float, float]:
    """ln|I0(x) + lambda| and the sign of I0(x) + lambda.

    Inside |hbar x| <= EXP_LIMIT this is the logarithm of shifted_i0(). Beyond
    it the leading exponential of I0 is kept in log space, so the result stays
    finite where I0 itself overflows.

    Returns:
        Tuple (log magnitude, sign); (-inf, 0.0) where I0 + lambda vanishes
    """
    u = seed_mode.hbar * x
    if abs(u) > EXP_LIMIT:
        tail = _log_abs_i0_tail(seed_mode, x)
        if tail is not None:
            log_i0, sign = tail
            ratio = 1.0 + sign * lam * math.exp(-log_i0)
            if ratio == 0.0:
                return -math.inf, 0.0
            return log_i0 + math.log(abs(ratio)), sign * math.copysign(1.0, ratio)
        if seed_mode.B == 0.0 and u < 0:
            # vacuum tail: I0 + lambda = (lambda - c) + c e^{hbar x}
            c = seed_mode.scale * seed_mode.scale * seed_mode.A * seed_mode.A / seed_mode.hbar
            offset = lam - c
            if offset == 0.0:
                return math.log(c) + u, 1.0
            value = offset + c * math.exp(u)
            return math.log(abs(value)), math.copysign(1.0, value)

    value = shifted_i0(seed_mode, x, lam, mode, tol, limit)
    if value == 0.0:
        return -math.inf, 0.0
    return math.log(abs(value)), math.copysign(1.0, value)
