"""Interface for frequency-dependent resistance models."""

from abc import ABC, abstractmethod
from typing import Any, Dict


class IResistanceModel(ABC):
    """Interface for resistance models R(omega, beta) used in noise spectra.

    Built-in models ignore beta; the argument is part of the contract so that
    user-supplied models may depend on temperature.
    """

    @classmethod
    @abstractmethod
    def from_config(cls, config: Dict[str, Any]) -> "IResistanceModel":
        """Create a model from a parameter dictionary.

        Args:
            config: Component values keyed by name (e.g. {'R': 50.0})

        Returns:
            Configured model

        Raises:
            ArgumentError: If a parameter is missing or not positive
        """
        pass

    @abstractmethod
    def resistance(self, omega: float, beta: float) -> float:
        """Evaluate the resistance at angular frequency omega.

        Args:
            omega: Angular frequency (> 0)
            beta: Inverse temperature

        Returns:
            Non-negative resistance
        """
        pass

    @property
    @abstractmethod
    def kind(self) -> str:
        """Model kind (e.g., 'constant', 'parallel_rlc')."""
        pass

    @property
    @abstractmethod
    def parameters(self) -> Dict[str, float]:
        """Component values of the model."""
        pass
