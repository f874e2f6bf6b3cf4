"""Pydantic configuration models."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

OutputFormat = Literal["text", "json"]
MethodName = Literal["richardson", "direct", "telescoped"]

# base * 2^15 = 524288 recurrence steps at the default base
MAX_LEVELS = 16


class EvaluationConfig(BaseModel):
    """Numeric evaluation settings."""

    digits: int = Field(default=10, ge=1)
    method: MethodName = "richardson"

    # Richardson schedule: nodes base, 2 base, ..., 2^(levels-1) base
    base: int = Field(default=16, ge=4)
    levels: Optional[int] = Field(default=None, ge=2, le=MAX_LEVELS)  # None: derived from digits

    # Direct summation
    max_terms: int = Field(default=100_000, ge=1)

    precision_bits: Optional[int] = Field(default=None, ge=16)  # None: derived from digits
    tolerance_exp: Optional[int] = Field(default=None, ge=1)  # None: same as digits


class OutputConfig(BaseModel):
    """Console output settings."""

    format: OutputFormat = "text"


class CatalogConfig(BaseModel):
    """Catalog verification settings."""

    verify_precision_bits: int = Field(default=256, ge=16)


class TelescopeConfig(BaseModel):
    """Main configuration for pitelescope."""

    evaluation: EvaluationConfig = Field(default_factory=EvaluationConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    catalog: CatalogConfig = Field(default_factory=CatalogConfig)


class RuntimeSettings(BaseSettings):
    """Settings read from PI_TELESCOPE_* environment variables."""

    model_config = SettingsConfigDict(env_prefix="PI_TELESCOPE_")

    threads: Optional[PositiveInt] = None


class CliConfig(BaseModel):
    """The validated settings of one command invocation."""

    subcommand: str
    output_format: OutputFormat = "text"
    precision_digits: int = Field(default=10, ge=1)
    max_terms: int = Field(default=100_000, ge=1)
    levels: Optional[int] = Field(default=None, ge=2, le=MAX_LEVELS)
    base: int = Field(default=16, ge=4)
