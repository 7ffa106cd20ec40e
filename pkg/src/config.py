"""Centralized configuration for the Elnitsky toolkit."""

from __future__ import annotations

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Absolute project root derived from this file's location.
PROJECT_ROOT: Path = Path(__file__).resolve().parent.parent

KNOWLEDGE_DIR: Path = PROJECT_ROOT / "knowledge"
THEOREMS_KNOWLEDGE: Path = KNOWLEDGE_DIR / "theorems.yaml"
LOG_ROOT: Path = PROJECT_ROOT / "logs"


class Settings(BaseSettings):
    """Enumeration caps and runtime switches, overridable via ELNITSKY_* env vars."""

    model_config = SettingsConfigDict(
        env_prefix="ELNITSKY_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_tilings: int = Field(default=1_000_000, gt=0, description="Cap on commutation classes per permutation")
    max_words: int = Field(default=10_000_000, gt=0, description="Cap on materialised reduced words")
    max_optimal: int = Field(default=1_000_000, gt=0, description="Cap on alternating permutations enumerated")
    workers: int = Field(default=1, ge=1, description="Processes used by the verification harness")
    cross_check: bool = Field(
        default=False,
        description="Assert both formulations of each closed-form condition at runtime",
    )
    log_dir: Path = Field(default=LOG_ROOT / "verification", description="Directory for JSONL run logs")


settings = Settings()


def ensure_directories() -> None:
    """Ensure that the log directory exists before writing any artifacts."""
    Path(settings.log_dir).mkdir(parents=True, exist_ok=True)
