"""
Runtime settings for leflab.

Values come from ``LEFLAB_*`` environment variables, optionally loaded from
the project ``.env``. CLI flags override them.
"""

import os
import logging
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError

# Load environment variables from .env file
load_dotenv(dotenv_path=os.path.join(os.path.dirname(__file__), "..", ".env"))

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# --- Defaults ---
DEFAULT_SEED = 0
DEFAULT_FIELD = "fp:32003"
DEFAULT_GB_BUDGET = 200_000
DEFAULT_MINOR_CAP = 5000
DEFAULT_ARTINIAN_CAP = 60
DEFAULT_JOBS = 1
DEFAULT_CENSUS_CAP = 8


@dataclass(frozen=True)
class Settings:
    seed: int = DEFAULT_SEED
    field: str = DEFAULT_FIELD
    gb_budget: int = DEFAULT_GB_BUDGET
    minor_cap: int = DEFAULT_MINOR_CAP
    artinian_cap: int = DEFAULT_ARTINIAN_CAP
    jobs: int = DEFAULT_JOBS
    census_cap: int = DEFAULT_CENSUS_CAP
    log_level: str = "INFO"

    def with_overrides(self, **changes) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _int_env(key: str, default: int, minimum: int) -> int:
    raw = os.environ.get(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(key, raw, "not an integer")
    if value < minimum:
        raise ConfigError(key, raw, f"must be >= {minimum}")
    return value


def load_settings() -> Settings:
    """Read the LEFLAB_* environment into a Settings object."""
    return Settings(
        seed=_int_env("LEFLAB_SEED", DEFAULT_SEED, 0),
        field=os.environ.get("LEFLAB_FIELD", DEFAULT_FIELD).strip() or DEFAULT_FIELD,
        gb_budget=_int_env("LEFLAB_GB_BUDGET", DEFAULT_GB_BUDGET, 1),
        minor_cap=_int_env("LEFLAB_MINOR_CAP", DEFAULT_MINOR_CAP, 1),
        artinian_cap=_int_env("LEFLAB_ARTINIAN_CAP", DEFAULT_ARTINIAN_CAP, 1),
        jobs=_int_env("LEFLAB_JOBS", DEFAULT_JOBS, 1),
        census_cap=_int_env("LEFLAB_CENSUS_CAP", DEFAULT_CENSUS_CAP, 2),
        log_level=os.environ.get("LEFLAB_LOG_LEVEL", "INFO").upper(),
    )


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """Configure root logging: stderr always, plus a file when requested."""
    handlers = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
