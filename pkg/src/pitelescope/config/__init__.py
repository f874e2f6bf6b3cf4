"""Configuration module."""

from pitelescope.config.loader import load_config, resolve_config
from pitelescope.config.models import (
    CatalogConfig,
    CliConfig,
    EvaluationConfig,
    OutputConfig,
    RuntimeSettings,
    TelescopeConfig,
)

__all__ = [
    "CatalogConfig",
    "CliConfig",
    "EvaluationConfig",
    "OutputConfig",
    "RuntimeSettings",
    "TelescopeConfig",
    "load_config",
    "resolve_config",
]
