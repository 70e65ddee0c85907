"""Run registered verification suites and assemble a report."""

import logging
from typing import List, Optional

from core.models.config import VerifyConfig
from core.models.reports import CheckResult, VerifyReport
from core.registry.plugin_registry import ALL_SUITES, PluginRegistry

logger = logging.getLogger(__name__)


def run_verification(suite: str = ALL_SUITES, config: Optional[VerifyConfig] = None) -> VerifyReport:
    """Run one suite, or every registered suite in registration order.

    Args:
        suite: Suite name or 'all'
        config: Verification settings (defaults if None)

    Returns:
        VerifyReport whose overall flag is the conjunction of its checks

    Raises:
        ArgumentError: If the suite is not registered
    """
    config = config or VerifyConfig()
    checks: List[CheckResult] = []
    for name, suite_class in PluginRegistry().suites_for(suite):
        logger.debug(f"Running suite {name}")
        checks.extend(suite_class().run(config))

    report = VerifyReport.from_checks(suite, checks)
    failed = report.failed()
    if failed:
        logger.warning(f"Verification '{suite}' failed {len(failed)} of {len(checks)} checks")
    else:
        logger.info(f"Verification '{suite}' passed all {len(checks)} checks")
    return report
