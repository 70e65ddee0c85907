"""Pytest configuration and fixtures."""

import math
import shutil
import tempfile
from pathlib import Path

import pytest

from modules.actions import plugin as action_plugin
from modules.darboux import plugin as darboux_plugin
from modules.noise import plugin as noise_plugin
from modules.verify import plugin as verify_plugin

HBAR_VALUES = [0.5, 1.0, 2.0]


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path)


@pytest.fixture(autouse=True)
def builtin_plugins():
    """Make sure the built-in plugins are registered, even after a registry.clear()."""
    for plugin in (action_plugin, darboux_plugin, noise_plugin, verify_plugin):
        plugin.register()
    yield


@pytest.fixture
def positive_grid():
    """Log-spaced grid on [0.1, 10] with 64 points."""
    return [0.1 * 100.0 ** (i / 63) for i in range(64)]


@pytest.fixture
def symmetric_grid():
    """Linear grid on [-10, 10] with 81 points, avoiding x = 0."""
    return [-10.0 + 20.0 * (i + 0.5) / 81 for i in range(81)]


@pytest.fixture
def sample_config():
    """Provide a sample configuration dictionary."""
    return {
        "numerics": {
            "quad_tolerance": 1e-11,
            "validation_grid_density": 128,
        },
        "verify": {
            "tolerance": 1e-8,
            "hbar_values": [1.0],
        },
        "logging": {
            "level": "WARNING",
            "console_colors": False,
        },
        "run": {
            "seed": "vacuum",
            "lambda": [2.0, math.inf],
        },
    }
