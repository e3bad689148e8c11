"""
Workbench configuration

Defaults live in ``configs/default.json``. The environment variable
``OPCHAR_MAX_WEIGHT`` overrides the truncation weight; command-line options
override both.
"""
import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parents[2] / "configs" / "default.json"
MAX_WEIGHT_ENV = "OPCHAR_MAX_WEIGHT"


class WorkbenchConfig(BaseModel):
    """
    Truncation defaults and runtime settings shared by the CLI and the verifier
    """
    max_weight: int = Field(8, ge=0, le=40, description="Default truncation weight")
    hbar_min: float = Field(-4, description="Lower end of the hbar window")
    hbar_max: float = Field(8, description="Upper end of the hbar window")
    psi_order: int = Field(8, ge=1, description="Default order of the Psi series")
    stirling_order: int = Field(10, ge=1, le=10, description="Order of the Stirling check")
    hz_order: int = Field(8, ge=1, le=8, description="Order of the Harer-Zagier series")
    wick_bound: int = Field(5, ge=1, description="Largest 2(g-1)+n covered by graph oracles")
    random_samples: int = Field(20, ge=1, description="Random inputs per randomized check")
    seed: int = Field(20240, description="Seed of the verification random generator")
    log_level: str = Field("INFO", description="Logging level name")
    output_format: str = Field("table", description="Default output format")

    @field_validator("hbar_min", "hbar_max")
    @classmethod
    def validate_half_integer(cls, v):
        """hbar exponents are half-integers"""
        if (2 * v) != int(2 * v):
            raise ValueError(f"hbar bound must be a half-integer, got {v}")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        """Accept only standard logging level names"""
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level: {v}")
        return v

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v):
        if v not in ("json", "table"):
            raise ValueError("output_format must be 'json' or 'table'")
        return v

    @model_validator(mode="after")
    def validate_window(self):
        if self.hbar_min > self.hbar_max:
            raise ValueError("hbar_min must not exceed hbar_max")
        return self

    @property
    def hexp_min_x2(self) -> int:
        return int(2 * self.hbar_min)

    @property
    def hexp_max_x2(self) -> int:
        return int(2 * self.hbar_max)


def load_config(path: Optional[Union[str, Path]] = None) -> WorkbenchConfig:
    """
    Load the workbench configuration

    Args:
        path: JSON file to read; defaults to ``configs/default.json``

    Returns:
        Validated configuration with the environment override applied
    """
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    data = {}
    if config_path.exists():
        with open(config_path, "r") as f:
            data = json.load(f)
        logger.debug(f"Configuration read from {config_path}")
    elif path is not None:
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    env_weight = os.environ.get(MAX_WEIGHT_ENV)
    if env_weight is not None:
        try:
            data["max_weight"] = int(env_weight)
        except ValueError:
            raise ValueError(f"{MAX_WEIGHT_ENV} must be an integer, got {env_weight!r}")
        logger.debug(f"max_weight overridden by {MAX_WEIGHT_ENV}={env_weight}")

    return WorkbenchConfig(**data)
