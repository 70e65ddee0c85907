"""Nyquist-Johnson spectral power and its Darboux generalization.

P(omega, beta) = (omega / pi) R(omega, beta) f(beta omega), with f the Planck
action or a Darboux family member. Signs are carried as computed.
"""

import logging
import math
from typing import List, Optional, Sequence, Union

from core.interfaces.errors import ArgumentError, LambdaValidationError
from core.interfaces.resistance import IResistanceModel
from core.models.action import ActionFamily, ActionModel, format_lambda
from core.models.config import NumericsConfig
from core.models.results import TemperatureRegime
from core.models.spectrum import SpectrumRecord, SpectrumTable
from modules.actions.closed_forms import planck_action
from modules.darboux.family import DarbouxFamily, build_family
from modules.noise.resistance import resistance

logger = logging.getLogger(__name__)


def _power(omega: float, r: float, f: float) -> float:
    return omega / math.pi * r * f


def nyquist_power(omega: float, beta: float, model: IResistanceModel, hbar: float = 1.0) -> float:
    """Nyquist-Johnson power (omega / pi) R(omega, beta) f_P(beta omega).

    Raises:
        ArgumentError: If omega <= 0
        SingularityError: If beta omega == 0
    """
    r = resistance(model, omega, beta)
    return _power(omega, r, planck_action(beta * omega, hbar))


def darboux_power(omega: float, beta: float, family: DarbouxFamily, model: IResistanceModel) -> float:
    """Generalized power (omega / pi) R(omega, beta) f_g(beta omega; lambda).

    For lambda = +inf with the Planck seed this is nyquist_power bit for bit.

    Raises:
        DomainError: If beta omega is outside the family's domain
    """
    r = resistance(model, omega, beta)
    return _power(omega, r, family.value(beta * omega))


def regime_of(x: float, power: float) -> str:
    """Regime annotation of a spectrum row: fermionic when x < 0 or P < 0."""
    if x < 0 or power < 0:
        return TemperatureRegime.NEGATIVE_T_FERMION.value
    return TemperatureRegime.POSITIVE_T_BOSON.value


def spectrum_sweep(
    omegas: Sequence[float],
    beta: float,
    lambdas: Sequence[float],
    model: IResistanceModel,
    seed: Union[ActionModel, str] = ActionFamily.PLANCK,
    hbar: float = 1.0,
    include_reference: bool = False,
    strict: bool = False,
    allow_negative_x: bool = False,
    numerics: Optional[NumericsConfig] = None
) -> SpectrumTable:
    """Tabulate P over an omega grid for several Darboux parameters.

    Every lambda is validated on [min x, max x] with x = beta omega before any
    record is produced.

    Args:
        omegas: Angular frequencies (> 0)
        beta: Inverse temperature (non-zero)
        lambdas: Darboux parameters (+inf gives the Nyquist-Johnson reference)
        model: Resistance model
        seed: Seed action or its family tag
        hbar: Action unit (used when seed is a tag)
        include_reference: Add lambda = +inf if absent
        strict: Require lambda > 0
        allow_negative_x: Admit x <= 0 for the Planck seed
        numerics: Quadrature and scan settings

    Returns:
        SpectrumTable ordered by (omega, lambda), +inf last

    Raises:
        ArgumentError: For an empty or non-positive omega grid or beta == 0
        LambdaValidationError: If any lambda is invalid (the whole sweep is rejected)
    """
    if not omegas:
        raise ArgumentError("Spectrum sweep needs at least one omega")
    if any(not omega > 0 for omega in omegas):
        raise ArgumentError("Spectrum omegas must all be positive")
    if beta == 0:
        raise ArgumentError("beta must be non-zero (x = beta omega = 0 is singular)")

    if not isinstance(seed, ActionModel):
        seed = ActionModel(ActionFamily(seed), hbar)

    members = sorted(set(float(lam) for lam in lambdas) | ({math.inf} if include_reference else set()))
    if not members:
        raise ArgumentError("Spectrum sweep needs at least one lambda")

    xs = [beta * omega for omega in omegas]
    domain = (min(xs), max(xs))
    families: List[DarbouxFamily] = []
    for lam in members:
        try:
            families.append(build_family(
                seed, lam, domain, strict=strict,
                allow_negative_x=allow_negative_x, numerics=numerics
            ))
        except LambdaValidationError:
            logger.error(f"Spectrum sweep rejected: lambda = {format_lambda(lam)} is invalid on {domain}")
            raise

    records = []
    for omega in sorted(omegas):
        for family in families:
            r = resistance(model, omega, beta)
            power = darboux_power(omega, beta, family, model)
            records.append(SpectrumRecord(
                omega=omega,
                beta=beta,
                lam=family.lam,
                resistance=r,
                power=power,
                regime=regime_of(beta * omega, power),
            ))

    logger.info(
        f"Spectrum sweep: {len(omegas)} omega x {len(families)} lambda = {len(records)} records "
        f"({model.kind} resistance, {seed.name} seed)"
    )
    return SpectrumTable(records=records, resistance_kind=model.kind, seed=seed.name)
