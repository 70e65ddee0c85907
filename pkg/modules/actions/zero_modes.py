"""Zero modes w(x) = W (A e^{hbar x/2} + B e^{-hbar x/2}) and their logarithmic derivatives.

Every mode in scope solves w'' = (hbar/2)^2 w. The logarithmic derivative
w'/w is evaluated as a ratio of exponentially scaled terms, so the
normalization W cancels exactly and large |hbar x| never overflows.
"""

import logging
import math
from typing import Tuple

from core.interfaces.errors import ArgumentError, NodeError
from core.models.action import ZeroMode
from modules.numerics.kernels import EXP_LIMIT, signed_exp

logger = logging.getLogger(__name__)


def _combination(A: float, B: float, h: float, sign: float) -> float:
    """A e^h + sign * B e^{-h}, evaluated directly (|h| small enough)."""
    return A * math.exp(h) + sign * B * math.exp(-h)


def _log_combination(A: float, B: float, h: float, sign: float) -> Tuple[float, float]:
    """Return (log|value|, sign of value) of A e^h + sign * B e^{-h}.

    The dominant exponential is factored out so the remaining term is <= 1.
    """
    if h >= 0:
        inner = A + sign * B * math.exp(-2.0 * h)
        offset = h
    else:
        inner = A * math.exp(2.0 * h) + sign * B
        offset = -h
    if inner == 0.0:
        return -math.inf, 0.0
    return offset + math.log(abs(inner)), math.copysign(1.0, inner)


def general_zero_mode(
    x: float,
    A: float,
    B: float,
    hbar: float = 1.0,
    scale: float = 1.0
) -> Tuple[float, float]:
    """Evaluate the general zero mode and its derivative.

    Args:
        x: Scaled inverse temperature
        A: Coefficient of e^{hbar x/2}
        B: Coefficient of e^{-hbar x/2}
        hbar: Action unit
        scale: Normalization W

    Returns:
        Tuple (w, w') with w' = (hbar/2) W (A e^{hbar x/2} - B e^{-hbar x/2})

    Raises:
        ArgumentError: If (A, B) == (0, 0)
        NumericOverflowError: If w exceeds the float range
    """
    if A == 0 and B == 0:
        raise ArgumentError("Zero-mode coefficients (A, B) must not both vanish")

    h = 0.5 * hbar * x
    if abs(hbar * x) <= EXP_LIMIT:
        w = scale * _combination(A, B, h, 1.0)
        w_prime = 0.5 * hbar * scale * _combination(A, B, h, -1.0)
        return w, w_prime

    # log-space branch
    log_w, sign_w = _log_combination(A, B, h, 1.0)
    log_wp, sign_wp = _log_combination(A, B, h, -1.0)
    log_scale = math.log(abs(scale))
    scale_sign = math.copysign(1.0, scale)
    w = 0.0 if sign_w == 0.0 else signed_exp(log_w + log_scale, sign_w * scale_sign)
    w_prime = 0.0 if sign_wp == 0.0 else signed_exp(
        log_wp + log_scale + math.log(0.5 * hbar), sign_wp * scale_sign
    )
    return w, w_prime


def zero_mode_values(mode: ZeroMode, x: float) -> Tuple[float, float]:
    """Evaluate (w, w') of a ZeroMode at x."""
    return general_zero_mode(x, mode.A, mode.B, mode.hbar, mode.scale)


def _node_error(mode: ZeroMode, x: float) -> NodeError:
    node = mode.node()
    where = x if node is None else node
    return NodeError(
        f"Zero mode ({mode.family.value}) vanishes at x = {where!r}; "
        f"its logarithmic derivative has a pole there",
        x=where
    )


def _stable_ratio_parts(A: float, B: float, h: float) -> Tuple[float, float, float]:
    """Numerator, denominator and damping factor of (A e^h - B e^{-h}) / (A e^h + B e^{-h}).

    Both parts are divided by the dominant exponential, and exact
    cancellations (A == B or A == -B) go through expm1.
    """
    if h >= 0:
        e = math.exp(-2.0 * h)
        numerator = -A * math.expm1(-2.0 * h) if A == B else A - B * e
        denominator = -A * math.expm1(-2.0 * h) if A == -B else A + B * e
    else:
        e = math.exp(2.0 * h)
        numerator = A * math.expm1(2.0 * h) if A == B else A * e - B
        denominator = A * math.expm1(2.0 * h) if A == -B else A * e + B
    return numerator, denominator, e


def log_derivative_action(mode: ZeroMode, x: float) -> float:
    """Action f = w'/w connected to a zero mode.

    The normalization scale drops out, so the result is bit-identical for any
    scale.

    Args:
        mode: Zero mode
        x: Evaluation point

    Returns:
        w'(x) / w(x)

    Raises:
        NodeError: If w(x) == 0 (reports the node location)
    """
    A, B = mode.A, mode.B
    if B == 0:
        return 0.5 * mode.hbar
    if A == 0:
        return -0.5 * mode.hbar

    numerator, denominator, _ = _stable_ratio_parts(A, B, 0.5 * mode.hbar * x)
    if denominator == 0.0:
        raise _node_error(mode, x)
    return 0.5 * mode.hbar * (numerator / denominator)


def log_derivative_slope(mode: ZeroMode, x: float) -> float:
    """Derivative of w'/w, i.e. (hbar/2)^2 - (w'/w)^2 evaluated without cancellation.

    Raises:
        NodeError: If w(x) == 0
    """
    A, B = mode.A, mode.B
    if A == 0 or B == 0:
        return 0.0
    _, denominator, e = _stable_ratio_parts(A, B, 0.5 * mode.hbar * x)
    if denominator == 0.0:
        raise _node_error(mode, x)
    return mode.hbar * mode.hbar * A * B * e / (denominator * denominator)


def log_abs_zero_mode(mode: ZeroMode, x: float) -> float:
    """ln|w(x)| without forming w itself.

    Raises:
        NodeError: If w(x) == 0
    """
    A, B = mode.A, mode.B
    h = 0.5 * mode.hbar * x
    log_scale = math.log(abs(mode.scale))
    if B == 0:
        return log_scale + math.log(abs(A)) + h
    if A == 0:
        return log_scale + math.log(abs(B)) - h

    if h >= 0:
        if A == -B:
            inner = -A * math.expm1(-2.0 * h)
        else:
            inner = A + B * math.exp(-2.0 * h)
    else:
        if A == -B:
            inner = A * math.expm1(2.0 * h)
        else:
            inner = A * math.exp(2.0 * h) + B
    if inner == 0.0:
        raise _node_error(mode, x)
    return log_scale + (abs(h) + math.log(abs(inner)))


def signed_log_zero_mode(mode: ZeroMode, x: float) -> Tuple[float, float]:
    """Return (ln|w(x)|, sign of w(x)) for large |hbar x| where w itself may overflow.

    Raises:
        NodeError: If w(x) == 0
    """
    A, B = mode.A, mode.B
    h = 0.5 * mode.hbar * x
    if B == 0:
        log_w, sign_w = math.log(abs(A)) + h, math.copysign(1.0, A)
    elif A == 0:
        log_w, sign_w = math.log(abs(B)) - h, math.copysign(1.0, B)
    else:
        log_w, sign_w = _log_combination(A, B, h, 1.0)
    if sign_w == 0.0:
        raise _node_error(mode, x)
    return log_w + math.log(abs(mode.scale)), sign_w * math.copysign(1.0, mode.scale)


def fermionic_zero_mode(seed_mode: ZeroMode, x: float) -> float:
    """Fermionic zero mode w_f = 1 / w_b, solving w_f'' = V2 w_f.

    Raises:
        NodeError: At a node of the bosonic mode
    """
    w, _ = zero_mode_values(seed_mode, x)
    if w == 0.0:
        raise _node_error(seed_mode, x)
    return 1.0 / w
