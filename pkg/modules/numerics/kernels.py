"""Numerically stable exponential and hyperbolic kernels.

Every kernel avoids forming e^u - 1 or e^u directly, so arguments up to the
double-precision exponent limit evaluate without overflow and small arguments
keep full relative precision.
"""

import math

from core.interfaces.errors import NumericOverflowError, SingularityError

# Beyond this |u| exponentials are handled through their asymptotic branch
EXP_LIMIT = 700.0


def stable_expm1_ratio(u: float) -> float:
    """Evaluate 1 / (e^u - 1).

    For u > 0 the result is computed as e^{-u} / (1 - e^{-u}) with expm1, which
    underflows gracefully to 0; for u < 0 it is 1 / expm1(u), which tends to -1.

    Args:
        u: Argument (non-zero)

    Returns:
        1 / (e^u - 1)

    Raises:
        SingularityError: If u == 0
        NumericOverflowError: If |u| is so small that the result is not representable
    """
    if u == 0.0:
        raise SingularityError("1/(e^u - 1) is singular at u = 0", x=0.0)
    if u > 0.0:
        result = math.exp(-u) / -math.expm1(-u)
    else:
        result = 1.0 / math.expm1(u)
    if math.isinf(result):
        raise NumericOverflowError(f"1/(e^u - 1) overflows at u = {u!r}")
    return result


def csch2_half(u: float) -> float:
    """Evaluate csch^2(u/2) = 4 e^{-|u|} / (1 - e^{-|u|})^2.

    Raises:
        SingularityError: If u == 0
    """
    if u == 0.0:
        raise SingularityError("csch^2(u/2) is singular at u = 0", x=0.0)
    a = abs(u)
    denominator = math.expm1(-a)
    result = 4.0 * math.exp(-a) / (denominator * denominator)
    if math.isinf(result):
        raise NumericOverflowError(f"csch^2(u/2) overflows at u = {u!r}")
    return result


def sech2_half(u: float) -> float:
    """Evaluate sech^2(u/2) = 4 e^{-|u|} / (1 + e^{-|u|})^2."""
    t = math.exp(-abs(u))
    return 4.0 * t / ((1.0 + t) * (1.0 + t))


def signed_exp(log_magnitude: float, sign: float) -> float:
    """Return sign * exp(log_magnitude), raising on overflow.

    Raises:
        NumericOverflowError: If the magnitude exceeds the float range
    """
    try:
        return math.copysign(math.exp(log_magnitude), sign)
    except OverflowError:
        raise NumericOverflowError(f"exp({log_magnitude!r}) overflows")
