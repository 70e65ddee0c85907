"""Main orchestrator for thermodarboux commands."""

import dataclasses
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence

from core.config.config_loader import ConfigLoader
from core.interfaces.errors import ArgumentError, NumericOverflowError, SingularityError
from core.models.action import DARBOUX_SEEDS, ActionFamily, ActionModel, format_lambda
from core.models.config import VerifyConfig
from core.models.reports import GridSpec, RunConfig, VerifyReport
from core.models.spectrum import SPECTRUM_COLUMNS
from core.registry.plugin_registry import PluginRegistry
from modules.darboux.family import DarbouxFamily, build_family
from modules.noise.resistance import parse_resistance_spec
from modules.noise.spectrum import spectrum_sweep
from modules.thermo.observables import internal_energy
from modules.verify.runner import run_verification
from thermodarboux.output import SINGULAR, Table

# Import plugins to register families, resistance models and suites
import modules.verify  # noqa: F401

logger = logging.getLogger(__name__)

ACTION_COLUMNS = ["x", "f", "f_prime"]
FAMILY_COLUMNS = ["x", "lambda", "f_g", "V_1g", "w_lambda", "I0", "v"]
VERIFY_COLUMNS = ["name", "max_residual", "tolerance", "passed"]

DEFAULT_GRID = GridSpec(start=0.1, stop=10.0, count=64, log=True)

FAMILY_ALIASES = {
    "fermi": ActionFamily.FERMI_SYMMETRIC,
    "general": ActionFamily.GENERAL_ZERO_MODE,
}


def resolve_family(tag: str) -> ActionFamily:
    """Map a CLI family tag (or one of its short aliases) to an ActionFamily.

    Raises:
        ArgumentError: For an unknown tag
    """
    if tag in FAMILY_ALIASES:
        return FAMILY_ALIASES[tag]
    try:
        return ActionFamily(tag)
    except ValueError:
        known = sorted([f.value for f in ActionFamily] + list(FAMILY_ALIASES))
        raise ArgumentError(f"Unknown action family '{tag}' (known: {', '.join(known)})")


class ThermoDarbouxOrchestrator:
    """Turns a RunConfig into tables and verification reports.

    Holds the loaded configuration; every command is a pure function of the
    RunConfig, so identical configs give identical tables.
    """

    def __init__(self, config_path: Optional[str] = None):
        """Initialize the orchestrator.

        Args:
            config_path: Path to configuration file (optional)

        Raises:
            ConfigurationError: If the config file is missing or invalid
        """
        self.config_loader = ConfigLoader()
        if config_path:
            self.config = self.config_loader.load_from_file(config_path)
        else:
            self.config = self.config_loader.load_defaults()
        self.settings = self.config_loader.typed()

        missing = PluginRegistry().missing_action_families()
        if missing:
            logger.warning(f"No evaluator registered for: {', '.join(f.value for f in missing)}")

        logger.debug("thermodarboux orchestrator initialized")

    def run_config(self, command: str, overrides: Dict[str, Any], log: Optional[bool] = None) -> RunConfig:
        """Merge the config file's run section with command-line overrides.

        Args:
            command: CLI command name
            overrides: RunConfig fields given on the command line
            log: Force log (True) or linear (False) grid spacing

        Returns:
            Validated RunConfig

        Raises:
            pydantic.ValidationError: For unknown keys or invalid values
        """
        merged = dict(self.settings.run)
        if "lambda" in merged:
            merged["lambdas"] = merged.pop("lambda")
        merged.update(overrides)
        merged["command"] = command
        run = RunConfig(**merged)
        if log is not None and run.grid is not None:
            run = run.model_copy(update={"grid": GridSpec(**{**run.grid.model_dump(), "log": log})})
        logger.debug(f"Run config: {run.model_dump(by_alias=True)}")
        return run

    # Commands

    def action_table(self, run: RunConfig) -> Table:
        """Tabulate f, f' (and U when omega is set) of one action over the grid."""
        model = self._action_model(run)
        evaluator = model.evaluator()
        columns = list(ACTION_COLUMNS)
        functions: List[Callable[[float], float]] = [evaluator.value, evaluator.derivative]
        if run.omega is not None:
            columns.append("U")
            functions.append(lambda x: internal_energy(evaluator, x, run.omega))

        rows = [self._row([x], functions, x, run.strict_lambda, model.name) for x in self._points(run)]
        logger.info(f"Evaluated {model.name} at {len(rows)} points")
        return Table("action", columns, rows, {"family": model.name, "hbar": run.hbar})

    def family_table(self, run: RunConfig) -> Table:
        """Tabulate Darboux family members, lambda by lambda.

        Raises:
            LambdaValidationError: If any lambda is invalid on the grid's domain
        """
        seed = self._seed_model(run)
        points = self._points(run)
        domain = (points[0], points[-1])
        lambdas = list(dict.fromkeys(run.lambdas))
        if run.include_seed and math.inf not in lambdas:
            lambdas.append(math.inf)

        members = [
            build_family(
                seed, lam, domain,
                scale=run.scale,
                strict=run.strict_lambda,
                i0_mode=run.i0_mode,
                allow_negative_x=run.allow_negative_x,
                numerics=self.settings.numerics,
            )
            for lam in lambdas
        ]

        rows = []
        for member in members:
            functions = self._family_functions(member)
            for x in points:
                rows.append(self._row([x, member.lam], functions, x, run.strict_lambda, member.name))
        logger.info(f"Evaluated {len(members)} members of the {seed.name}-seeded family at {len(points)} points")
        return Table("family", list(FAMILY_COLUMNS), rows, {"seed": seed.name, "hbar": run.hbar})

    def spectrum_table(self, run: RunConfig) -> Table:
        """Tabulate the (generalized) Nyquist-Johnson power over an omega grid.

        Raises:
            ArgumentError: For an unparseable resistance spec or a bad omega grid
            LambdaValidationError: If any lambda is invalid on [min x, max x]
        """
        model = parse_resistance_spec(run.resistance)
        table = spectrum_sweep(
            self._points(run),
            run.beta,
            run.lambdas,
            model,
            seed=self._seed_model(run),
            include_reference=run.include_seed,
            strict=run.strict_lambda,
            allow_negative_x=run.allow_negative_x,
            numerics=self.settings.numerics,
        )
        metadata = {"seed": table.seed, "resistance_kind": table.resistance_kind}
        return Table("spectrum", list(SPECTRUM_COLUMNS), table.rows(), metadata)

    def verify(self, run: RunConfig) -> VerifyReport:
        """Run the selected verification suite."""
        config = self.verify_config(run)
        logger.info(f"Running verification suite '{run.suite}' (tolerance {config.tolerance:g})")
        return run_verification(run.suite, config)

    def verify_config(self, run: RunConfig) -> VerifyConfig:
        """Verification settings, with the run's tolerance when one was given."""
        if "tolerance" in run.model_fields_set:
            return dataclasses.replace(self.settings.verify, tolerance=run.tolerance)
        return self.settings.verify

    @staticmethod
    def verify_table(report: VerifyReport) -> Table:
        """One row per check."""
        rows = [[c.name, c.max_residual, c.tolerance, c.passed] for c in report.checks]
        return Table("verify", list(VERIFY_COLUMNS), rows, {"suite": report.suite, "overall": report.overall})

    # Helpers

    @staticmethod
    def _points(run: RunConfig) -> List[float]:
        return (run.grid or DEFAULT_GRID).points()

    @staticmethod
    def _action_model(run: RunConfig) -> ActionModel:
        family = resolve_family(run.family)
        if family is ActionFamily.DARBOUX:
            lam = run.lambdas[0]
            if len(run.lambdas) > 1:
                logger.warning(f"action evaluates one Darboux member; using lambda = {format_lambda(lam)}")
            return ActionModel.darboux(resolve_family(run.seed), lam, run.hbar, run.A, run.B)
        return ActionModel(family, run.hbar, run.A, run.B)

    @staticmethod
    def _seed_model(run: RunConfig) -> ActionModel:
        family = resolve_family(run.seed)
        if family not in DARBOUX_SEEDS:
            seeds = ", ".join(s.value for s in DARBOUX_SEEDS)
            raise ArgumentError(f"'{run.seed}' cannot seed a Darboux family (seeds: {seeds})")
        return ActionModel(family, run.hbar, run.A, run.B)

    @staticmethod
    def _i0_column(member: DarbouxFamily) -> Callable[[float], float]:
        """I0 of the member, written as +-inf where it exceeds the float range."""
        def i0(x: float) -> float:
            try:
                return member.i0(x)
            except NumericOverflowError:
                return math.copysign(math.inf, x)
        return i0

    @staticmethod
    def _family_functions(member: DarbouxFamily) -> List[Callable[[float], float]]:
        return [
            member.value,
            member.potential,
            member.transformed_zero_mode,
            ThermoDarbouxOrchestrator._i0_column(member),
            member.v,
        ]

    @staticmethod
    def _row(
        prefix: List[Any],
        functions: Sequence[Callable[[float], float]],
        x: float,
        strict: bool,
        name: str
    ) -> List[Any]:
        """Evaluate one row; a pole either aborts (strict) or flags the row."""
        try:
            return prefix + [fn(x) for fn in functions]
        except SingularityError as e:
            if strict:
                raise
            logger.warning(f"{name} is singular at x = {x!r}: {e}")
            return prefix + [SINGULAR] * len(functions)
