"""Result data models returned by the numerical operations."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive quadrature.

    Attributes:
        value: Integral estimate
        error_bound: Estimated absolute error (>= 0)
        evaluations: Number of integrand evaluations (>= 1)
    """
    value: float
    error_bound: float
    evaluations: int


class ResidualKind(str, Enum):
    """Which Riccati-type equation a residual refers to."""

    BOSONIC = "bosonic"
    FERMIONIC = "fermionic"
    BERNOULLI = "bernoulli"


@dataclass
class RiccatiResidualReport:
    """Pointwise residuals of a Riccati-type equation over a grid.

    Attributes:
        kind: Residual kind
        grid: Sample points
        residuals: Residual at each sample point
        max_abs_residual: Largest absolute residual
        argmax_x: Grid point where the largest residual occurs
    """
    kind: ResidualKind
    grid: List[float]
    residuals: List[float]
    max_abs_residual: float
    argmax_x: float


@dataclass
class LambdaValidation:
    """Result of scanning I0(x) + lambda for zeros on a domain.

    Violations are data, not errors: an invalid lambda yields valid=False and
    the brackets that contain each forbidden point.

    Attributes:
        lam: Darboux parameter
        domain: Scanned interval (lo, hi)
        grid_density: Number of scan points
        valid: True if no forbidden point was detected
        brackets: Grid intervals containing a zero of I0 + lambda
        boundary_degenerate: True if I0(0) + lambda = 0, i.e. lambda = 0
        min_margin: Smallest |I0(x) + lambda| over the scan grid
        reason: Human-readable explanation for an invalid lambda
    """
    lam: float
    domain: Tuple[float, float]
    grid_density: int
    valid: bool
    brackets: List[Tuple[float, float]] = field(default_factory=list)
    boundary_degenerate: bool = False
    min_margin: float = float("inf")
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization.

        Returns:
            Dictionary representation of the report
        """
        return {
            "lambda": self.lam,
            "domain": list(self.domain),
            "grid_density": self.grid_density,
            "valid": self.valid,
            "brackets": [list(b) for b in self.brackets],
            "boundary_degenerate": self.boundary_degenerate,
            "min_margin": self.min_margin,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class ConvergenceRow:
    """Sup-norm deviation of one family member from its seed.

    Attributes:
        lam: Darboux parameter
        sup_deviation: max over the grid of |f_g(x; lam) - f_p(x)|
        argmax_x: Where the maximum is attained
        ratio: sup_deviation divided by the previous row's (None for the first)
    """
    lam: float
    sup_deviation: float
    argmax_x: float
    ratio: Optional[float] = None


@dataclass
class ConvergenceReport:
    """Sequence of sup-norm deviations for an increasing lambda sequence."""
    seed: str
    grid: List[float]
    rows: List[ConvergenceRow]

    def is_monotone(self) -> bool:
        """Check that the deviations are non-increasing.

        Returns:
            True if every deviation is <= the previous one
        """
        deviations = [row.sup_deviation for row in self.rows]
        return all(b <= a for a, b in zip(deviations, deviations[1:]))

    def ratios(self) -> List[float]:
        """Successive deviation ratios."""
        return [row.ratio for row in self.rows if row.ratio is not None]


@dataclass
class EntropyProfile:
    """Normalized entropy sampled over a grid (k_B = 1).

    Attributes:
        grid: Sample points
        entropy_values: S(x) at each sample point
        normalization_constant: Constant subtracted so that S -> 0 as x -> +inf
        family: Name of the action or Darboux family used
    """
    grid: List[float]
    entropy_values: List[float]
    normalization_constant: float
    family: str


class TemperatureRegime(str, Enum):
    """Sign regime of the temperature in x = omega / T."""

    POSITIVE_T_BOSON = "positive_T_boson"
    NEGATIVE_T_FERMION = "negative_T_fermion"


@dataclass(frozen=True)
class TemperatureSign:
    """Signed temperature read off x = omega / T (k_B = 1).

    Attributes:
        x: Scaled inverse temperature
        omega: Angular frequency (> 0)
        temperature: T = omega / x, same sign as x
        regime: positive_T_boson for x > 0, negative_T_fermion for x < 0
    """
    x: float
    omega: float
    temperature: float
    regime: TemperatureRegime

    @property
    def beta(self) -> float:
        """Inverse temperature; smaller beta is hotter."""
        return self.x / self.omega


@dataclass(frozen=True)
class KinkProfile:
    """Plateaus and transition width of a kink-shaped action.

    Attributes:
        left_asymptote: Plateau for x -> -inf
        right_asymptote: Plateau for x -> +inf
        transition_width: x-distance between the two 90% crossing levels
    """
    left_asymptote: float
    right_asymptote: float
    transition_width: float
