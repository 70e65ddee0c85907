"""Configuration loading and management."""

import yaml
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Dict, Any, Optional

from core.models.config import ThermoDarbouxConfig

logger = logging.getLogger(__name__)


class ConfigurationError(Exception):
    """Exception raised when configuration is invalid."""
    pass


class ConfigLoader:
    """Configuration loader for thermodarboux."""

    def __init__(self):
        """Initialize the config loader."""
        self.config: Optional[Dict[str, Any]] = None

    def load_from_file(self, config_path: str) -> Dict[str, Any]:
        """Load configuration from YAML file.

        Sections missing from the file are filled in from the defaults.

        Args:
            config_path: Path to config file

        Returns:
            Dictionary containing configuration

        Raises:
            ConfigurationError: If config file not found or invalid
        """
        path = Path(config_path)

        if not path.exists():
            raise ConfigurationError(f"Config file not found: {path}")

        logger.info(f"Loading configuration from: {path}")

        try:
            with open(path, 'r') as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in config file: {e}")
        except Exception as e:
            raise ConfigurationError(f"Error reading config file: {e}")

        if not isinstance(loaded, dict):
            raise ConfigurationError(f"Config file must contain a mapping, got {type(loaded).__name__}")

        defaults = self.load_defaults()
        for section, values in loaded.items():
            if section not in defaults:
                raise ConfigurationError(f"Unknown config section: {section}")
            if values is None:
                continue
            if not isinstance(values, dict):
                raise ConfigurationError(f"Config section '{section}' must be a mapping")
            defaults[section].update(values)

        self.config = defaults
        self.typed()  # rejects unknown keys early
        logger.info("Configuration loaded successfully")
        return self.config

    def load_defaults(self) -> Dict[str, Any]:
        """Load default configuration.

        Returns:
            Dictionary containing default configuration
        """
        self.config = asdict(ThermoDarbouxConfig())
        logger.debug("Loaded default configuration")
        return self.config

    def typed(self) -> ThermoDarbouxConfig:
        """Typed view of the loaded configuration.

        Returns:
            ThermoDarbouxConfig built from the loaded dictionary

        Raises:
            ConfigurationError: If a section contains an unknown key
        """
        if self.config is None:
            self.load_defaults()
        try:
            return ThermoDarbouxConfig.from_dict(self.config)
        except TypeError as e:
            raise ConfigurationError(f"Invalid configuration key: {e}")

