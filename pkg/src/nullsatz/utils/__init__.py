"""
Utility modules for the nullsatz toolkit.

This package contains:
- Configuration from CLI flags, environment and defaults
- The exception hierarchy
- File operations and session file logging

Usage:
    from nullsatz.utils.common import get_engine_settings
    from nullsatz.utils.errors import PolynomialParseError
    from nullsatz.utils.file_logger import start_logging_session
"""

from .common import EngineSettings, get_engine_settings, get_env_config, resolve_setting
from .errors import NullsatzError

__all__ = [
    'EngineSettings',
    'get_engine_settings',
    'get_env_config',
    'resolve_setting',
    'NullsatzError',
]
