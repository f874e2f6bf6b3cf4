from __future__ import annotations

import pytest
import yaml
from pydantic import ValidationError

from pitelescope.config.defaults import DEFAULT_CONFIG_YAML
from pitelescope.config.loader import (
    find_config_file,
    invocation_config,
    load_config,
    merge_configs,
    resolve_config,
)
from pitelescope.config.models import CliConfig, RuntimeSettings, TelescopeConfig


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("PI_TELESCOPE_THREADS", raising=False)


def test_defaults():
    cfg = TelescopeConfig()
    assert cfg.evaluation.digits == 10
    assert cfg.evaluation.method == "richardson"
    assert cfg.evaluation.base == 16
    assert cfg.evaluation.levels is None
    assert cfg.output.format == "text"
    assert cfg.catalog.verify_precision_bits == 256


def test_default_file_matches_model_defaults():
    assert TelescopeConfig(**yaml.safe_load(DEFAULT_CONFIG_YAML)) == TelescopeConfig()


def test_load_config(tmp_path):
    path = tmp_path / "custom.yaml"
    path.write_text("evaluation:\n  digits: 20\n  method: direct\n", encoding="utf-8")
    cfg = load_config(path)
    assert cfg.evaluation.digits == 20
    assert cfg.evaluation.method == "direct"
    assert cfg.evaluation.base == 16


def test_load_config_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "absent.yaml")


def test_invalid_values_rejected(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("evaluation:\n  method: simpson\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_config(path)
    with pytest.raises(ValidationError):
        TelescopeConfig(evaluation={"base": 2})
    with pytest.raises(ValidationError):
        CliConfig(subcommand="eval", precision_digits=0)


def test_find_config_file_searches_parents(tmp_path):
    (tmp_path / "pitelescope.yaml").write_text("{}\n", encoding="utf-8")
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    assert find_config_file(nested) == (tmp_path / "pitelescope.yaml").resolve()


def test_merge_skips_none():
    base = {"evaluation": {"digits": 10, "base": 16}, "output": {"format": "text"}}
    merged = merge_configs(base, {"evaluation": {"digits": 30, "base": None}, "output": None})
    assert merged == {"evaluation": {"digits": 30, "base": 16}, "output": {"format": "text"}}


def test_resolve_precedence(tmp_path):
    (tmp_path / "pitelescope.yaml").write_text(
        "evaluation:\n  digits: 20\n  base: 8\n", encoding="utf-8"
    )
    cfg = resolve_config(None, {"evaluation": {"digits": 12, "base": None}})
    assert cfg.evaluation.digits == 12
    assert cfg.evaluation.base == 8


def test_runtime_settings_from_environment(monkeypatch):
    assert RuntimeSettings().threads is None
    monkeypatch.setenv("PI_TELESCOPE_THREADS", "3")
    assert RuntimeSettings().threads == 3
    monkeypatch.setenv("PI_TELESCOPE_THREADS", "0")
    with pytest.raises(ValidationError):
        RuntimeSettings()


def test_empty_and_non_mapping_files(tmp_path):
    empty = tmp_path / "empty.yaml"
    empty.write_text("", encoding="utf-8")
    assert load_config(empty) == TelescopeConfig()
    listing = tmp_path / "listing.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(yaml.YAMLError):
        load_config(listing)


def test_levels_are_capped():
    assert TelescopeConfig(evaluation={"levels": 16}).evaluation.levels == 16
    with pytest.raises(ValidationError):
        TelescopeConfig(evaluation={"levels": 17})


def test_invocation_config(tmp_path):
    (tmp_path / "pitelescope.yaml").write_text(
        "evaluation:\n  base: 8\noutput:\n  format: json\n", encoding="utf-8"
    )
    cfg, cli = invocation_config("eval", None, None, {"digits": 12, "levels": None})
    assert cli.subcommand == "eval"
    assert cli.output_format == "json"
    assert cli.precision_digits == 12
    assert cli.base == 8
    assert cli.levels is None
    assert cfg.evaluation.base == 8
    _, cli = invocation_config("show", None, "text", {})
    assert cli.output_format == "text"
