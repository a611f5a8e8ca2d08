"""Centralized configuration using Pydantic Settings."""

from pathlib import Path
from threading import Lock

from dotenv import dotenv_values
from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.base.exceptions import ConfigurationError
from src.kernel.params import EvalPolicy
from src.schemas.report import MAX_SEED, SamplePlan

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """heunkit settings.

    HEUNKIT_* variables of the process environment win over a .env file in
    the working directory.
    """

    # Sampling
    SEED: int = Field(default=0, ge=0, le=MAX_SEED)
    DRAWS: int = Field(default=20, ge=1)
    TOLERANCE: float | None = Field(default=None, ge=0)
    PARAM_BOUND: float = Field(default=2.0, gt=0)
    X_FRACTION: float = Field(default=0.2, gt=0, lt=1)

    # Series evaluation
    MAX_TERMS: int = Field(default=4096, ge=8)
    ABS_TOL: float = Field(default=1e-17, gt=0)
    REL_TOL: float = Field(default=1e-16, gt=0)
    DOMAIN_MARGIN: float = Field(default=0.05, gt=0, lt=1)

    # Runner
    WORKERS: int = Field(default=1, ge=1)
    REPORT_PATH: Path | None = None

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    model_config = SettingsConfigDict(
        env_prefix="HEUNKIT_",
        env_file=".env",
        case_sensitive=True,
        env_file_encoding="utf-8",
        extra="ignore",
    )

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def parse_log_level(cls, value: str) -> str:
        """Normalize the level name to upper case."""
        level = str(value).upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of: {list(LOG_LEVELS)}")
        return level

    def eval_policy(self) -> EvalPolicy:
        return EvalPolicy(
            max_terms=self.MAX_TERMS,
            abs_tol=self.ABS_TOL,
            rel_tol=self.REL_TOL,
            domain_margin=self.DOMAIN_MARGIN,
        )

    def sample_plan(self) -> SamplePlan:
        return SamplePlan(
            seed=self.SEED,
            draws_per_rule=self.DRAWS,
            param_bound=self.PARAM_BOUND,
            x_fraction=self.X_FRACTION,
            tolerance=self.TOLERANCE,
        )


def _file_values(env_file: str | Path) -> dict[str, object]:
    """HEUNKIT_* entries of an env-style file, keyed by field name."""
    prefix = Settings.model_config.get("env_prefix", "")
    return {
        key[len(prefix) :]: value
        for key, value in dotenv_values(env_file).items()
        if key.startswith(prefix) and value is not None
    }


def load_settings(env_file: str | Path | None = None, **overrides: object) -> Settings:
    """Build Settings from an explicit env file plus overrides.

    Overrides win over the file given here, which wins over HEUNKIT_*
    variables of the process environment and then over .env.

    Raises:
        ConfigurationError: A value fails validation or the file is missing.
    """
    if env_file is not None and not Path(env_file).is_file():
        raise ConfigurationError(f"config file not found: {env_file}", config_key="config")
    kwargs = _file_values(env_file) if env_file is not None else {}
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings(**kwargs)  # type: ignore[arg-type]
    except ValidationError as exc:
        key = ".".join(str(part) for part in exc.errors()[0]["loc"]) if exc.errors() else None
        raise ConfigurationError(f"invalid configuration: {exc.errors()[0]['msg']}", config_key=key) from exc


# Global settings instance
_settings: Settings | None = None
_settings_lock = Lock()


def get_settings() -> Settings:
    """
    Get the singleton Settings instance.

    Returns:
        Settings: The process-wide settings.

    Raises:
        ConfigurationError: The environment holds an invalid value.
    """
    global _settings
    if _settings is None:
        with _settings_lock:
            if _settings is None:
                _settings = load_settings()
    return _settings


def reset_settings() -> None:
    """Reset the singleton Settings instance.

    Intended for use in tests only. Clears the cached settings so the
    next call to ``get_settings()`` creates a fresh instance.
    """
    global _settings
    with _settings_lock:
        _settings = None
