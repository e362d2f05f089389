from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Literal

from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    """Runtime settings loaded from SPECQ_* environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="SPECQ_",
        case_sensitive=False,
        extra="ignore",
    )

    app_name: str = "specq"
    app_version: str = Field(default="0.1.0")

    # Worker pool for enumeration and sweeps
    threads: int = Field(default=1)

    # Numerics
    eigensolver: Literal["jacobi", "lapack"] = "jacobi"

    # Enumeration size guards
    max_enumeration_order: int = Field(default=7)
    large_enumeration_order: int = Field(default=8)

    # Randomized property runs
    random_seed: int = Field(default=0)

    # Observability
    log_level: str = Field(default="WARNING")
    json_logs: bool = Field(default=True)

    def validate_threads(self) -> None:
        errors = []

        if self.threads < 1:
            errors.append(f"THREADS must be a positive integer (threads={self.threads})")

        if self.max_enumeration_order > self.large_enumeration_order:
            errors.append(
                "MAX_ENUMERATION_ORDER cannot exceed LARGE_ENUMERATION_ORDER"
            )

        if errors:
            raise ValueError(
                "Settings validation failed:\n"
                + "\n".join(f"  - {e}" for e in errors)
            )


settings = Settings()
