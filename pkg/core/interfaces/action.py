"""Interface for thermodynamic action evaluators."""

from abc import ABC, abstractmethod


class IActionEvaluator(ABC):
    """Interface for anything that evaluates an action f(x) and its derivative.

    Closed-form families (Planck, vacuum, thermal, Fermi-Dirac, general zero
    mode) and the one-parameter Darboux families all implement this contract,
    so residual checks, observables and spectra accept either of them.
    """

    @abstractmethod
    def value(self, x: float) -> float:
        """Evaluate the action f(x).

        Args:
            x: Scaled inverse temperature x = beta * omega

        Returns:
            Action value

        Raises:
            SingularityError: If f has a pole at x
        """
        pass

    @abstractmethod
    def derivative(self, x: float) -> float:
        """Evaluate df/dx at x.

        Args:
            x: Scaled inverse temperature

        Returns:
            Derivative value
        """
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Family name (e.g., 'planck', 'darboux[vacuum]')."""
        pass
