"""Logging configuration."""

import sys
from typing import Optional

from loguru import logger
from pydantic_settings import BaseSettings, SettingsConfigDict

DEFAULT_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}:{function}</cyan> | "
    "{message}"
)


class LoggingConfig(BaseSettings):
    """Log sink settings, read from ``PARCOH_LOG_*`` variables."""

    model_config = SettingsConfigDict(
        env_prefix="PARCOH_LOG_", env_file=".env", extra="ignore"
    )

    level: str = "WARNING"
    format: str = DEFAULT_FORMAT
    file: Optional[str] = None


def setup_logging(config: LoggingConfig) -> None:
    """Replace loguru's default sink with the configured ones.

    Reports go to stdout, so the console sink always writes to stderr.
    """
    logger.remove()
    logger.add(sys.stderr, level=config.level.upper(), format=config.format)
    if config.file:
        logger.add(
            config.file,
            level="DEBUG",
            format=config.format,
            enqueue=True,
            mode="w",
        )
    logger.debug(f"Logging configured at level {config.level.upper()}")
