"""Locating, reading and merging pitelescope configuration."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Mapping

import yaml

from pitelescope.config.models import CliConfig, TelescopeConfig

CONFIG_NAMES = ("pitelescope.yaml", "pitelescope.yml", ".pitelescope.yaml", ".pitelescope.yml")


def load_config(config_path: Path) -> TelescopeConfig:
    """Read one YAML file; an empty file means all defaults."""
    try:
        text = config_path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileNotFoundError(f"Configuration file not found: {config_path}") from None

    data = yaml.safe_load(text)
    if data is None:
        return TelescopeConfig()
    if not isinstance(data, dict):
        raise yaml.YAMLError(
            f"{config_path}: expected a mapping at top level, got {type(data).__name__}"
        )
    return TelescopeConfig.model_validate(data)


def find_config_file(start_dir: Path) -> Path | None:
    """The first config file in ``start_dir`` or its nearest parent that has one."""
    start = start_dir.resolve()
    for directory in (start, *start.parents):
        for name in CONFIG_NAMES:
            candidate = directory / name
            if candidate.is_file():
                return candidate
    return None


def merge_configs(base: Mapping[str, Any], override: Mapping[str, Any]) -> dict[str, Any]:
    """Deep merge; a None in ``override`` keeps the base value."""
    merged = dict(base)
    for key, value in override.items():
        if value is None:
            continue
        current = merged.get(key)
        if isinstance(current, Mapping) and isinstance(value, Mapping):
            merged[key] = merge_configs(current, value)
        else:
            merged[key] = value
    return merged


def resolve_config(
    config_path: Path | None, overrides: Mapping[str, Any] | None = None
) -> TelescopeConfig:
    """Explicit file, else an auto-discovered one, else defaults; then command-line overrides."""
    if config_path is not None:
        cfg = load_config(config_path)
    else:
        found = find_config_file(Path.cwd())
        cfg = load_config(found) if found else TelescopeConfig()
    if not overrides:
        return cfg
    return TelescopeConfig.model_validate(merge_configs(cfg.model_dump(), overrides))


def invocation_config(
    subcommand: str,
    config_path: Path | None,
    output: str | None,
    evaluation: Mapping[str, Any],
) -> tuple[TelescopeConfig, CliConfig]:
    """
    The settings of one command: ``evaluation`` flags and ``output`` over the
    config file over defaults, plus the validated per-command view.
    """
    cfg = resolve_config(config_path, {"evaluation": evaluation, "output": {"format": output}})
    cli = CliConfig(
        subcommand=subcommand,
        output_format=cfg.output.format,
        precision_digits=cfg.evaluation.digits,
        max_terms=cfg.evaluation.max_terms,
        levels=cfg.evaluation.levels,
        base=cfg.evaluation.base,
    )
    return cfg, cli
