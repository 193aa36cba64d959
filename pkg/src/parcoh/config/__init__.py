"""Application configuration."""

from dataclasses import dataclass

from loguru import logger
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from parcoh.config.logging import LoggingConfig


class ParcohSettings(BaseSettings):
    """Bounds and defaults for the brute-force searches.

    Every field can be overridden with a ``PARCOH_`` environment variable,
    e.g. ``PARCOH_SEARCH_BOUND=14``.
    """

    model_config = SettingsConfigDict(
        env_prefix="PARCOH_", env_file=".env", extra="ignore"
    )

    search_bound: int = Field(default=12, ge=1)
    equivalence_bound: int = Field(default=1_000_000, ge=1)
    eta_search_bound: int = Field(default=200_000, ge=1)
    default_max_degree: int = Field(default=4, ge=2)


@dataclass
class AppConfig:
    """All configuration sections."""

    settings: ParcohSettings
    logging: LoggingConfig


def load_config() -> AppConfig:
    """Read configuration from the environment (and ``.env`` if present)."""
    settings = ParcohSettings()
    logger.trace(
        f"Loaded settings: search_bound={settings.search_bound}, "
        f"equivalence_bound={settings.equivalence_bound}, "
        f"eta_search_bound={settings.eta_search_bound}"
    )
    return AppConfig(settings=settings, logging=LoggingConfig())


__all__ = ["AppConfig", "LoggingConfig", "ParcohSettings", "load_config"]
