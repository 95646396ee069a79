"""
Common utilities and shared configuration for the nullsatz toolkit.

Settings come from CLI flags, then environment variables (a ``.env`` file is
loaded on import), then built-in defaults.
"""

import os
import logging
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables
load_dotenv()

# Configure logger
logger = logging.getLogger(__name__)

DEFAULT_SEED = 0
DEFAULT_CAP = 8
DEFAULT_RETRY_CAP = 8
DEFAULT_MAX_MINORS = 20000
DEFAULT_FORMAT = "json"
DEFAULT_LOG_LEVEL = "INFO"


class EngineSettings(BaseModel):
    """Limits shared by the elimination engines."""
    retry_cap: int = Field(default=DEFAULT_RETRY_CAP, ge=0)
    max_minors: int = Field(default=DEFAULT_MAX_MINORS, ge=1)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️ {name}={raw!r} is not an integer, using default {default}")
        return default


def get_env_config() -> Dict[str, Any]:
    """
    Get every recognised environment setting in one dictionary.

    Returns:
        Dictionary with seed, cap, retry_cap, max_minors, format, log_level and log_dir
    """
    return {
        'seed': _env_int('NULLSATZ_SEED', DEFAULT_SEED),
        'cap': _env_int('NULLSATZ_CAP', DEFAULT_CAP),
        'retry_cap': _env_int('NULLSATZ_RETRY_CAP', DEFAULT_RETRY_CAP),
        'max_minors': _env_int('NULLSATZ_MAX_MINORS', DEFAULT_MAX_MINORS),
        'format': os.getenv('NULLSATZ_FORMAT', DEFAULT_FORMAT).strip().lower() or DEFAULT_FORMAT,
        'log_level': os.getenv('NULLSATZ_LOG_LEVEL', DEFAULT_LOG_LEVEL).strip().upper() or DEFAULT_LOG_LEVEL,
        'log_dir': os.getenv('NULLSATZ_LOG_DIR') or None,
    }


def resolve_setting(cli_value: Optional[Any], key: str, default: Any = None) -> Any:
    """
    Resolve one option with priority: CLI argument > environment variable > default.

    Args:
        cli_value: Value given on the command line (None if not given)
        key: Key in ``get_env_config()``
        default: Fallback when neither source provides a value

    Returns:
        The resolved value
    """
    # Priority 1: CLI argument
    if cli_value is not None:
        return cli_value

    # Priority 2: Environment variable
    env_value = get_env_config().get(key)
    if env_value is not None:
        return env_value

    # Priority 3: Default
    return default


def get_engine_settings(retry_cap: Optional[int] = None,
                        max_minors: Optional[int] = None) -> EngineSettings:
    """Build engine limits from explicit values or the environment."""
    return EngineSettings(
        retry_cap=resolve_setting(retry_cap, 'retry_cap', DEFAULT_RETRY_CAP),
        max_minors=resolve_setting(max_minors, 'max_minors', DEFAULT_MAX_MINORS),
    )
