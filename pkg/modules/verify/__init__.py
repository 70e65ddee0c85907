"""Verification suites asserting every identity as a numerical residual."""

from modules import noise, thermo  # noqa: F401  (registers the families and resistance models)
from modules.verify import plugin  # noqa: F401  (registers the suites)
from modules.verify.runner import run_verification

__all__ = ['run_verification']
