"""
Configuration module for the Landau level solver.
Loads settings from a key=value file and command-line overrides.
"""

from pathlib import Path
from typing import Any, Dict, Literal, Mapping, Optional, Tuple

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from models import BackgroundParams, ParticleParams, RadialGrid
from utils.errors import ConfigError, DomainError

VERSION = "0.1.0"

# Largest radial quantum number accepted from configuration
N_MAX_LIMIT = 10


class RunConfig(BaseModel):
    """Validated run configuration."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    # Background and particle
    eta: float
    omega: float = Field(ge=0)
    mass: float = Field(gt=0)
    dipole: float = Field(gt=0)
    e0: float = Field(gt=0)
    allow_disclination: bool = False

    # State selection
    n_max: int = Field(default=3, ge=0, le=N_MAX_LIMIT)
    l_min: int = -2
    l_max: int = 2
    spin: Literal["+1", "-1", "both"] = "both"

    # Numerics
    grid_points: int = Field(default=8001, ge=102)
    rho_inf_sigma: float = Field(default=36.0, ge=30)
    weak_field_threshold: float = Field(default=0.01, gt=0)
    tolerance: float = Field(default=1e-4, ge=0)
    strict: bool = False

    # Output and logging
    output_dir: str = "output"
    log_level: str = "INFO"
    log_file: Optional[str] = None

    @field_validator("spin", mode="before")
    @classmethod
    def _normalize_spin(cls, value: Any) -> Any:
        text = str(value).strip().lower()
        return {"1": "+1", "+1": "+1", "-1": "-1", "both": "both"}.get(text, text)

    @field_validator("log_level")
    @classmethod
    def _check_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level

    @model_validator(mode="after")
    def _check_ranges(self) -> "RunConfig":
        if not 0 < self.eta <= 1 and not (self.allow_disclination and self.eta > 0):
            raise ConfigError("eta", f"must lie in (0, 1], got {self.eta}")
        if self.l_min > self.l_max:
            raise ConfigError("l_min", f"must not exceed l_max ({self.l_min} > {self.l_max})")
        return self

    def background(self) -> BackgroundParams:
        return BackgroundParams(eta=self.eta, omega=self.omega, allow_disclination=self.allow_disclination)

    def particle(self) -> ParticleParams:
        return ParticleParams(m=self.mass, d=self.dipole, e0=self.e0)

    def spins(self) -> Tuple[int, ...]:
        return (1, -1) if self.spin == "both" else (int(self.spin),)

    def l_range(self) -> range:
        return range(self.l_min, self.l_max + 1)

    def grid(self, delta: float) -> RadialGrid:
        """Wavefunction grid with delta * rho_inf^2 = rho_inf_sigma."""
        return RadialGrid.for_delta(delta, sigma=self.rho_inf_sigma, points=self.grid_points)

    def echo(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


def _first_error(exc: ValidationError) -> ConfigError:
    error = exc.errors()[0]
    key = str(error["loc"][0]) if error.get("loc") else None
    cause = error.get("ctx", {}).get("error")
    if isinstance(cause, ConfigError):
        return cause
    message = error["msg"]
    if error["type"] == "missing":
        message = "required key is missing"
    elif error["type"] == "extra_forbidden":
        message = "unknown key"
    return ConfigError(key, message)


def parse_config(
    path: Optional[str] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """
    Build a RunConfig from a key=value file and overrides.

    Args:
        path: Optional config file (``#`` comments allowed)
        overrides: Values from command-line flags; None entries are ignored

    Returns:
        Validated RunConfig

    Raises:
        ConfigError: naming the offending key
    """
    values: Dict[str, Any] = {}
    if path is not None:
        file_path = Path(path)
        if not file_path.is_file():
            raise ConfigError(None, f"config file not found: {path}")
        for key, value in dotenv_values(file_path, interpolate=False).items():
            if value is None:
                raise ConfigError(key.lower(), "expected key=value")
            values[key.strip().lower()] = value.strip()

    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value

    try:
        return RunConfig(**values)
    except ValidationError as exc:
        raise _first_error(exc) from None


def require_bound_states(cfg: RunConfig) -> None:
    """Bound-state commands need a rotating frame."""
    if cfg.omega <= 0:
        raise ConfigError("omega", "must be > 0: no bound states without rotation")


def check_background(cfg: RunConfig) -> BackgroundParams:
    """BackgroundParams from the config, with domain errors reported as config errors."""
    try:
        return cfg.background()
    except DomainError as exc:
        raise ConfigError("eta", str(exc)) from None
