"""
Application configuration settings.
"""
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from relkit.core.errors import ConfigError

load_dotenv(".env.relkit")

OutputFormatName = Literal["table", "csv", "tsv"]


class Limits(BaseModel):
    """Resolved materialization limits handed to the services."""
    model_config = ConfigDict(frozen=True)

    powerset: int = 20
    ordinal: int = 10
    functions: int = 10**5
    cart: int = 10**6
    relation: int = 10**6


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_prefix="RELKIT_", env_file=".env.relkit", case_sensitive=True, extra="ignore")

    PROJECT_NAME: str = "relkit"
    VERSION: str = "0.1.0"
    DESCRIPTION: str = "In-memory relational engine over set-theoretic tuples and relations"

    # RELKIT_LIMIT replaces every element-count limit below
    LIMIT: Optional[int] = None

    POWERSET_LIMIT: int = 20
    ORDINAL_LIMIT: int = 10
    FUNCTION_LIMIT: int = 10**5
    CART_LIMIT: int = 10**6
    RELATION_LIMIT: int = 10**6

    OUTPUT_FORMAT: OutputFormatName = "table"

    # Logging
    LOG_CONSOLE: bool = False
    LOG_LEVEL: str = "info"
    LOGFIRE_TOKEN: Optional[str] = None

    @field_validator("LIMIT", mode="before")
    @classmethod
    def parse_limit(cls, v):
        if v is None or v == "":
            return None
        if isinstance(v, str):
            # accept 1e6 / 10**6 style values
            s = v.strip().replace("_", "")
            try:
                if "**" in s:
                    base, exp = s.split("**", 1)
                    return int(base) ** int(exp)
                return int(float(s))
            except (ValueError, OverflowError):
                raise ValueError(f"{v!r} is not an element count") from None
        return v

    @property
    def limits(self) -> Limits:
        """Limits after applying the RELKIT_LIMIT override."""
        if self.LIMIT is not None:
            return Limits(
                powerset=self.POWERSET_LIMIT,
                ordinal=self.ORDINAL_LIMIT,
                functions=self.LIMIT,
                cart=self.LIMIT,
                relation=self.LIMIT,
            )
        return Limits(
            powerset=self.POWERSET_LIMIT,
            ordinal=self.ORDINAL_LIMIT,
            functions=self.FUNCTION_LIMIT,
            cart=self.CART_LIMIT,
            relation=self.RELATION_LIMIT,
        )


def load_settings() -> tuple[Settings, Optional[ConfigError]]:
    """
    Read the settings from the environment.

    A value that does not parse leaves every setting at its default and comes
    back as the error, so the command line can report it instead of failing
    on import.
    """
    try:
        return Settings(), None
    except ValidationError as e:
        first = e.errors()[0]
        name = ".".join(str(p) for p in first["loc"])
        return Settings.model_construct(), ConfigError(f"RELKIT_{name}: {first['msg']}")


settings, settings_error = load_settings()
