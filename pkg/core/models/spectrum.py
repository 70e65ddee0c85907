"""Data models for noise spectra."""

from dataclasses import dataclass, field
from typing import Any, Dict, List

from core.models.action import format_lambda

SPECTRUM_COLUMNS = ["omega", "beta", "lambda", "R", "P", "regime"]


@dataclass(frozen=True)
class SpectrumRecord:
    """One row of a spectral power table.

    Attributes:
        omega: Angular frequency (> 0)
        beta: Inverse temperature
        lam: Darboux parameter (+inf for the Nyquist-Johnson reference)
        resistance: R(omega, beta)
        power: Power per unit bandwidth, sign kept as computed
        regime: Temperature-sign reading of the row
    """
    omega: float
    beta: float
    lam: float
    resistance: float
    power: float
    regime: str

    def to_row(self) -> List[Any]:
        """Row values in SPECTRUM_COLUMNS order."""
        return [self.omega, self.beta, self.lam, self.resistance, self.power, self.regime]


@dataclass
class SpectrumTable:
    """Spectral power records ordered by (omega, lambda).

    Attributes:
        records: Ordered records
        resistance_kind: Kind of resistance model used
        seed: Seed family of the Darboux generalization
    """
    records: List[SpectrumRecord] = field(default_factory=list)
    resistance_kind: str = ""
    seed: str = ""

    def __len__(self) -> int:
        return len(self.records)

    def rows(self) -> List[List[Any]]:
        """All records as rows."""
        return [record.to_row() for record in self.records]

    def for_lambda(self, lam: float) -> List[SpectrumRecord]:
        """Records belonging to one Darboux parameter."""
        key = format_lambda(lam)
        return [r for r in self.records if format_lambda(r.lam) == key]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "seed": self.seed,
            "resistance_kind": self.resistance_kind,
            "columns": SPECTRUM_COLUMNS,
            "rows": self.rows(),
        }
