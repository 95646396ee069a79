"""
File logging utilities for nullsatz jobs.
Writes a general execution log and an error log per session directory.
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional


class FileLogger:
    """Session file logging for CLI jobs."""

    def __init__(self, base_dir: str = "results/logs", session_timestamp: Optional[str] = None):
        """
        Initialize file logger.

        Args:
            base_dir: Base directory for log files (default: results/logs)
            session_timestamp: Fixed timestamp for session (if None, generates new one)
        """
        self.base_dir = Path(base_dir)
        self.session_timestamp = session_timestamp or datetime.now().strftime("%Y%m%d_%H%M%S")
        self.session_dir = self.base_dir / self.session_timestamp
        self.session_dir.mkdir(parents=True, exist_ok=True)

        self.general_logger: Optional[logging.Logger] = None
        self.error_logger: Optional[logging.Logger] = None

    def _make_logger(self, name: str, level: int, fmt: str) -> logging.Logger:
        log_file = self.session_dir / f"{name}.log"

        # One logger name per session and file
        logger = logging.getLogger(f"nullsatz_file.{self.session_timestamp}.{name}")
        logger.setLevel(level)
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)
            handler.close()

        file_handler = logging.FileHandler(log_file, mode='w', encoding='utf-8')
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(fmt, datefmt='%Y-%m-%d %H:%M:%S'))

        logger.addHandler(file_handler)
        logger.propagate = False
        return logger

    def setup_general_logger(self, name: str = "general_execution") -> logging.Logger:
        """
        Setup general execution logger.

        Args:
            name: Log file stem

        Returns:
            Configured logger instance
        """
        if self.general_logger:
            return self.general_logger

        logger = self._make_logger(name, logging.INFO, '%(asctime)s - %(levelname)s - %(message)s')
        self.general_logger = logger

        logger.info("=" * 80)
        logger.info(f"🚀 nullsatz session started: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        logger.info(f"📁 Log file: {self.session_dir / f'{name}.log'}")
        logger.info("=" * 80)
        return logger

    def setup_error_logger(self, name: str = "errors_and_warnings") -> logging.Logger:
        """
        Setup error-specific logger.

        Args:
            name: Log file stem

        Returns:
            Configured error logger instance
        """
        if self.error_logger:
            return self.error_logger

        logger = self._make_logger(
            name, logging.WARNING,
            '%(asctime)s - %(levelname)s - [%(funcName)s:%(lineno)d] - %(message)s'
        )
        self.error_logger = logger

        logger.warning("=" * 80)
        logger.warning(f"❌ Error tracking started: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        logger.warning("=" * 80)
        return logger

    def log_job_start(self, command: str, input_path: str, options: Dict[str, Any]):
        """Log job start."""
        if self.general_logger:
            self.general_logger.info("-" * 60)
            self.general_logger.info(f"🔧 JOB STARTED: {command}")
            self.general_logger.info(f"   Input: {input_path}")
            for key in sorted(options):
                self.general_logger.info(f"   {key}: {options[key]}")
            self.general_logger.info("-" * 60)

    def log_job_result(self, command: str, exit_code: int, summary: Dict[str, Any]):
        """Log job outcome with a short summary."""
        if self.general_logger:
            self.general_logger.info("-" * 60)
            status = "✅" if exit_code == 0 else "⚠️"
            self.general_logger.info(f"{status} JOB COMPLETED: {command} (exit code {exit_code})")
            for key in sorted(summary):
                self.general_logger.info(f"   {key}: {summary[key]}")
            self.general_logger.info("-" * 60)

    def log_error(self, error_type: str, context: str, error_message: str):
        """Log error to both general and error logs."""
        error_msg = f"[{error_type}] {context}: {error_message}"

        if self.general_logger:
            self.general_logger.error(error_msg)

        if self.error_logger:
            self.error_logger.error(error_msg)

    def close_loggers(self):
        """Close all file handlers."""
        if self.general_logger:
            self.general_logger.info("=" * 80)
            self.general_logger.info(f"📝 nullsatz session ended: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
            self.general_logger.info(f"📁 Session logs saved in: {self.session_dir}")
            self.general_logger.info("=" * 80)
            for handler in self.general_logger.handlers[:]:
                handler.close()
                self.general_logger.removeHandler(handler)

        if self.error_logger:
            self.error_logger.warning("=" * 80)
            self.error_logger.warning(f"❌ Error tracking ended: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
            self.error_logger.warning("=" * 80)
            for handler in self.error_logger.handlers[:]:
                handler.close()
                self.error_logger.removeHandler(handler)


# Global file logger instance and session management
_file_logger_instance: Optional[FileLogger] = None


def start_logging_session(log_dir: str, session_name: Optional[str] = None) -> FileLogger:
    """
    Start a new logging session under ``log_dir``.

    Args:
        log_dir: Base directory; a timestamped session directory is created inside
        session_name: Optional label written at the top of the general log

    Returns:
        The session's FileLogger
    """
    global _file_logger_instance

    if _file_logger_instance:
        _file_logger_instance.close_loggers()

    _file_logger_instance = FileLogger(base_dir=log_dir)
    _file_logger_instance.setup_general_logger()
    _file_logger_instance.setup_error_logger()

    _file_logger_instance.general_logger.info(f"🎬 LOGGING SESSION STARTED: {session_name or 'Default'}")
    return _file_logger_instance


def end_logging_session():
    """End the current logging session."""
    global _file_logger_instance

    if _file_logger_instance:
        if _file_logger_instance.general_logger:
            _file_logger_instance.general_logger.info("🎬 LOGGING SESSION ENDED")
        _file_logger_instance.close_loggers()
        _file_logger_instance = None


def get_file_logger() -> Optional[FileLogger]:
    """Get the active session logger, if any."""
    return _file_logger_instance
