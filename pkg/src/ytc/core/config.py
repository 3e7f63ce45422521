"""Configuration management for ytc.

Every exponential enumeration in the package is guarded by a hard cap. The caps live
here as Pydantic settings so library users can raise or lower them through the
environment, while the CLI builds its configuration from flags alone.

Classes:
    LimitsConfig: Enumeration caps
    LoggingConfig: Diagnostic output settings
    Config: Main configuration container
    CLIConfig: Configuration that ignores the environment

Example:
    ```python
    from ytc.core.config import Config, configure

    # From environment variables (YTC_LIMITS__HOCHSTER_MAX_UNIVERSE=16)
    config = Config()

    # From dictionary
    config = Config(limits={"shelling_max_facets": 12})
    configure(config)
    ```
"""

import logging
from typing import Optional, Tuple, Type

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

from ..exceptions import CapacityError


class LimitsConfig(BaseModel):
    """Enumeration caps.

    Exceeding any of these raises `CapacityError`; nothing is truncated silently.

    Attributes:
        max_vertices: Vertex count of any complex (bitset width)
        homology_max_vertices: Vertex count accepted by `reduced_betti`
        cohen_macaulay_max_vertices: Vertex count accepted by Reisner's test
        hochster_max_universe: Universe size for the 2^n Hochster sweep
        decomposition_max_vertices: Vertex count for the vertex-decomposability search
        shelling_max_facets: Facet count for the shelling-order search
        transversal_max_vertices: Ground set size for minimal transversal enumeration
        height_max_vertices: Ground set size for the minimum transversal search

    Environment Variables:
        YTC_LIMITS__HOCHSTER_MAX_UNIVERSE: Set the Hochster cap
        YTC_LIMITS__SHELLING_MAX_FACETS: Set the shelling cap
    """

    max_vertices: int = Field(default=64, ge=1, le=64, description="Vertices per complex")
    homology_max_vertices: int = Field(default=24, ge=1, description="Vertices for homology")
    cohen_macaulay_max_vertices: int = Field(default=20, ge=1, description="Vertices for Reisner")
    hochster_max_universe: int = Field(default=14, ge=1, description="Universe for Hochster")
    decomposition_max_vertices: int = Field(default=20, ge=1, description="Vertices for VD search")
    shelling_max_facets: int = Field(default=10, ge=1, description="Facets for shelling search")
    transversal_max_vertices: int = Field(
        default=20, ge=1, description="Ground set for minimal transversals"
    )
    height_max_vertices: int = Field(
        default=32, ge=1, description="Ground set for minimum transversal size"
    )


class LoggingConfig(BaseModel):
    """Diagnostic output settings.

    Attributes:
        level: stdlib level name
        json_logs: Render log events as JSON lines
    """

    level: str = Field(default="WARNING", description="Log level name")
    json_logs: bool = Field(default=False, description="Emit JSON log lines")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate the level against the stdlib names.

        Args:
            v: Level name in any case

        Returns:
            Upper-cased level name

        Raises:
            ValueError: If the name is not a stdlib level
        """
        name = v.upper()
        if not isinstance(logging.getLevelName(name), int):
            raise ValueError(f"Unknown log level: {v}")
        return name


class Config(BaseSettings):
    """Main configuration container for ytc.

    Environment Variables:
        Nested values use a double underscore delimiter:
        - YTC_LIMITS__HOMOLOGY_MAX_VERTICES=26
        - YTC_LOGGING__LEVEL=DEBUG
    """

    limits: LimitsConfig = Field(default_factory=LimitsConfig, description="Enumeration caps")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="Diagnostics")

    model_config = SettingsConfigDict(env_prefix="YTC_", env_nested_delimiter="__")


class CLIConfig(Config):
    """Configuration built from explicit values only.

    The command line is a pure function of its arguments, so this variant drops the
    environment and dotenv sources that `Config` would otherwise consult.
    """

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


_active: Optional[Config] = None


def get_config() -> Config:
    """Return the active configuration, reading the environment on first use."""
    global _active
    if _active is None:
        _active = Config()
    return _active


def configure(config: Optional[Config]) -> None:
    """Install `config` as the active configuration (None resets to the environment default)."""
    global _active
    _active = config


def enforce_limit(what: str, value: int, limit: str) -> None:
    """Raise `CapacityError` when `value` exceeds the active cap named `limit`.

    Args:
        what: Human-readable name of the measured quantity
        value: Measured size
        limit: Attribute name on `LimitsConfig`

    Raises:
        CapacityError: If the cap is exceeded
    """
    bound = getattr(get_config().limits, limit)
    if value > bound:
        raise CapacityError(f"{what} ({limit})", value, bound)
