"""Shared pytest configuration."""

from pathlib import Path
import sys

import pytest
import yaml

PROJECT_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(PROJECT_ROOT))

from src.config import settings  # noqa: E402  (import after path tweak)

EXAMPLES_PATH = PROJECT_ROOT / "tests" / "data" / "elnitsky_contract.yml"


@pytest.fixture(autouse=True)
def cross_check(monkeypatch):
    """Evaluate both formulations of every closed-form condition."""
    monkeypatch.setattr(settings, "cross_check", True)


@pytest.fixture(scope="session")
def examples():
    with EXAMPLES_PATH.open("r", encoding="utf-8") as handle:
        return yaml.safe_load(handle)
