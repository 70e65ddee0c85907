"""Thermodynamic observables built on actions: energy and entropy (k_B = 1)."""

import logging
import math
from typing import Sequence, Union

from core.interfaces.errors import ArgumentError, NormalizationError
from core.models.action import ActionFamily, ActionModel
from core.models.results import EntropyProfile
from modules.darboux.evaluator import DarbouxEvaluator
from modules.darboux.family import DarbouxFamily
from modules.numerics.differences import derivative_central

logger = logging.getLogger(__name__)

ActionLike = Union[ActionModel, DarbouxFamily]


def internal_energy(f: ActionLike, x: float, omega: float) -> float:
    """Internal energy U = omega f(x).

    Raises:
        ArgumentError: If omega <= 0
    """
    if not omega > 0:
        raise ArgumentError(f"omega must be positive, got {omega!r}")
    return omega * f.value(x)


def as_family(f: ActionLike) -> DarbouxFamily:
    """View an action as a Darboux family member.

    Plain actions become their own lambda = +inf member.

    Raises:
        UnsupportedError: For actions without a zero mode (thermal)
    """
    if isinstance(f, DarbouxFamily):
        return f
    if f.family is ActionFamily.DARBOUX:
        return DarbouxEvaluator(f).family
    return DarbouxFamily.unchecked(f, allow_negative_x=True)


def entropy_constant(family: DarbouxFamily) -> float:
    """C = lim_{x -> +inf} [x f(x) - ln|w(x; lambda)|], in closed form.

    With w = W (A e^{hbar x/2} + B e^{-hbar x/2}) and D = I0 + lambda:
    the seed member gives -ln|A W| (or -ln|B W| when A = 0); a finite
    lambda gives ln(|A W| / hbar), or ln|D_inf| - ln|B W| with
    D_inf = W^2 B^2 / hbar + lambda when A = 0.

    Raises:
        NormalizationError: If the limit is not finite
    """
    mode = family.seed_mode
    W, A, B, hbar = mode.scale, mode.A, mode.B, mode.hbar

    if family.is_seed:
        constant = -math.log(abs(A * W)) if A != 0 else -math.log(abs(B * W))
    elif A != 0:
        constant = math.log(abs(A * W) / hbar)
    else:
        d_inf = W * W * B * B / hbar + family.lam
        if d_inf == 0.0:
            raise NormalizationError(
                f"I0 + lambda tends to 0 as x -> +inf for {family.name}; entropy cannot be normalized"
            )
        constant = math.log(abs(d_inf)) - math.log(abs(B * W))

    if not math.isfinite(constant):
        raise NormalizationError(f"Entropy constant of {family.name} is not finite")
    return constant


def entropy(f: ActionLike, x: float) -> float:
    """Third-law normalized entropy S(x) = x f(x) - ln|w(x; lambda)| - C.

    For the Planck action this is the oscillator entropy
    x f_P - ln(2 sinh(hbar x / 2)); for the vacuum action it vanishes.

    Args:
        f: Action or Darboux family member
        x: Scaled inverse temperature (away from zero-mode nodes)

    Returns:
        S(x), tending to 0 as x -> +inf

    Raises:
        NodeError: At a node of the zero mode
        NormalizationError: If the normalizing limit is not finite
    """
    family = as_family(f)
    return x * family.value(x) - family.log_abs_transformed_zero_mode(x) - entropy_constant(family)


def entropy_profile(f: ActionLike, grid: Sequence[float]) -> EntropyProfile:
    """Entropy sampled over a grid, in grid order."""
    family = as_family(f)
    points = [float(x) for x in grid]
    constant = entropy_constant(family)
    values = [
        x * family.value(x) - family.log_abs_transformed_zero_mode(x) - constant
        for x in points
    ]
    logger.debug(f"Entropy profile of {family.name} on {len(points)} points (C = {constant:.12g})")
    return EntropyProfile(
        grid=points,
        entropy_values=values,
        normalization_constant=constant,
        family=family.name,
    )


def entropy_derivative_check(f: ActionLike, x: float, h: float = 1e-4) -> float:
    """Residual of dS/dx = x f'(x), with dS/dx by a central difference of step h.

    Returns:
        Central difference of S minus x f'(x); O(h^2) small
    """
    family = as_family(f)
    slope = derivative_central(lambda y: entropy(family, y), x, h)
    return slope - x * family.derivative(x)
