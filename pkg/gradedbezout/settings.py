"""Runtime settings loaded from the environment.

Values come from process environment variables, optionally seeded from a
``.env`` file via python-dotenv. Computations never read a configuration
file; these settings only tune logging and resource guards.
"""

import logging
import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from gradedbezout.errors import InputError

logger = logging.getLogger(__name__)

ENV_PREFIX = "GRADEDBEZOUT_"


class Settings(BaseModel):
    """Schema for ambient runtime settings."""

    log_level: str = Field("WARNING", description="Logging level name")
    log_dir: str | None = Field(None, description="Directory for rotating logs")
    max_antichain_rows: int = Field(
        20,
        ge=1,
        description="Largest antichain evaluated by inclusion-exclusion",
    )
    hilbert_smax: int = Field(
        10, ge=0, description="Default last degree for Hilbert cross-checks"
    )

    @field_validator("log_level")
    def level_is_known(cls, v: str) -> str:
        """Validate that the level name is a standard logging level."""
        name = v.strip().upper()
        if not isinstance(logging.getLevelName(name), int):
            raise ValueError(f"Unknown logging level: {v}")
        return name

    @property
    def level(self) -> int:
        """Numeric logging level."""
        return logging.getLevelName(self.log_level)


def load_settings(env_file: str | None = None) -> Settings:
    """Load settings from the environment.

    Args:
        env_file: Optional path of a ``.env`` file. When omitted, python-dotenv
            searches the working directory as usual.

    Returns:
        Validated settings.

    Raises:
        InputError: If an environment value fails validation.
    """
    load_dotenv(env_file)
    raw = {
        field: os.environ[ENV_PREFIX + field.upper()]
        for field in Settings.model_fields
        if ENV_PREFIX + field.upper() in os.environ
    }
    try:
        settings = Settings(**raw)
    except ValidationError as e:
        logger.error("Invalid environment settings: %s", str(e))
        raise InputError(f"Settings validation failed: {e!s}") from e
    logger.debug("Settings loaded", extra={"overrides": sorted(raw)})
    return settings
