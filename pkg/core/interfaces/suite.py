"""Interface for verification suites."""

from abc import ABC, abstractmethod
from typing import List

from core.models.config import VerifyConfig
from core.models.reports import CheckResult


class IVerificationSuite(ABC):
    """Interface for a named group of numerical residual checks.

    Each suite evaluates a set of identities on canonical grids and returns
    one CheckResult per identity. Check names cite the equation they assert,
    e.g. "riccati.eq2-planck-bosonic-residual".
    """

    @abstractmethod
    def run(self, config: VerifyConfig) -> List[CheckResult]:
        """Run every check of the suite.

        Args:
            config: Verification settings (tolerance, grids, hbar values)

        Returns:
            List of check results in a fixed order
        """
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """Suite name (e.g., 'riccati', 'darboux')."""
        pass
