"""Nyquist-Johnson spectra and their Darboux generalization."""

import math
from typing import List

from core.models.action import ActionModel
from core.models.reports import CheckResult
from modules.darboux.family import build_family
from modules.noise.resistance import ConstantResistance, ParallelRLCResistance
from modules.noise.spectrum import darboux_power, nyquist_power
from modules.numerics.scanning import log_grid
from modules.verify.base import VerificationSuite, largest, relative


class FdtSuite(VerificationSuite):
    """Checks the fluctuation-dissipation spectra in their limits."""

    @property
    def name(self) -> str:
        return "fdt"

    def checks(self) -> List[CheckResult]:
        c = self._config
        return [
            self.check("fdt.eq19-reference-reproduces-nyquist", 0.0, self._reference),
            self.check("fdt.eq18-classical-flatness", c.closed_form_tolerance, self._classical),
            self.check("fdt.eq18-zero-point-branch", c.closed_form_tolerance, self._zero_point),
            self.check("fdt.eq18-positivity", 0.0, self._positivity),
            self.check("fdt.eq18-rlc-resonance-bound", c.closed_form_tolerance, self._resonance),
            self.check("fdt.eq19-vacuum-fermionic-branch", c.closed_form_tolerance, self._fermionic_branch),
        ]

    def _reference(self) -> float:
        """lambda = +inf reproduces the Nyquist-Johnson power bit for bit."""
        model = ConstantResistance(1.0)
        residuals = []
        for hbar in self._config.hbar_values:
            for beta in (0.5, 1.0, 2.0):
                omegas = self.positive_grid()
                family = build_family(
                    ActionModel.planck(hbar), math.inf, (beta * omegas[0], beta * omegas[-1])
                )
                for omega in omegas:
                    residuals.append(
                        darboux_power(omega, beta, family, model) - nyquist_power(omega, beta, model, hbar)
                    )
        return largest(residuals)

    def _classical(self) -> float:
        """|P pi / (R T) - 1| <= (hbar beta omega)^2 / 12 when hbar beta omega <= 0.01."""
        model = ConstantResistance(3.0)
        excess = []
        for hbar in self._config.hbar_values:
            temperature = 100.0
            beta = 1.0 / temperature
            for u in log_grid(1e-6, 1e-2, 32):
                omega = u / (hbar * beta)
                power = nyquist_power(omega, beta, model, hbar)
                ratio = power * math.pi / (3.0 * temperature)
                excess.append(max(0.0, abs(ratio - 1.0) - u * u / 12.0))
        return largest(excess)

    def _zero_point(self) -> float:
        """P -> omega hbar R / (2 pi) once hbar beta omega is large."""
        model = ConstantResistance(1.0)
        residuals = []
        for hbar in self._config.hbar_values:
            beta = 10.0
            for omega in log_grid(40.0 / (hbar * beta), 70.0 / (hbar * beta), 16):
                expected = omega * hbar / (2.0 * math.pi)
                residuals.append(relative(nyquist_power(omega, beta, model, hbar) - expected, expected))
        return largest(residuals)

    def _positivity(self) -> float:
        """Nyquist-Johnson power is positive for x > 0."""
        model = ParallelRLCResistance(100.0, 10.0, 0.1)
        lowest = math.inf
        for hbar in self._config.hbar_values:
            for omega in self.positive_grid():
                lowest = min(lowest, nyquist_power(omega, 1.0, model, hbar))
        return max(0.0, -lowest) if lowest > 0 else math.inf

    def _resonance(self) -> float:
        """Parallel RLC resistance never exceeds R and equals it at omega0."""
        model = ParallelRLCResistance(100.0, 10.0, 0.1)
        excess = [max(0.0, model.resistance(omega, 1.0) - 100.0) for omega in log_grid(1e-3, 1e3, 257)]
        excess.append(model.resistance(model.omega0, 1.0) - 100.0)
        return largest(excess) / 100.0

    def _fermionic_branch(self) -> float:
        """Vacuum seed at lambda = 1/hbar gives P = -omega hbar R / (2 pi)."""
        model = ConstantResistance(math.pi)
        residuals = []
        for hbar in self._config.hbar_values:
            grid = self.positive_grid()
            family = build_family(ActionModel.vacuum(hbar), 1.0 / hbar, (grid[0], grid[-1]))
            for omega in grid:
                expected = -0.5 * omega * hbar
                residuals.append(relative(darboux_power(omega, 1.0, family, model) - expected, expected))
        return largest(residuals)
