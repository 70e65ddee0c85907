"""Configuration module for thermodarboux."""

from core.config.config_loader import ConfigLoader

__all__ = ['ConfigLoader']
