import pandas as pd
import pytest

from nullsatz.utils.common import (
    DEFAULT_MAX_MINORS,
    get_engine_settings,
    get_env_config,
    resolve_setting,
)
from nullsatz.utils.errors import NullsatzError, PolynomialParseError, RetryExhaustedError
from nullsatz.utils.file_logger import end_logging_session, get_file_logger, start_logging_session
from nullsatz.utils.file_utils import save_csv


def test_cli_value_beats_environment(monkeypatch):
    monkeypatch.setenv("NULLSATZ_SEED", "7")
    assert resolve_setting(3, "seed", 0) == 3
    assert resolve_setting(None, "seed", 0) == 7


def test_bad_integer_falls_back_to_default(monkeypatch):
    monkeypatch.setenv("NULLSATZ_CAP", "lots")
    assert get_env_config()["cap"] == 8


def test_engine_settings_from_environment(monkeypatch):
    monkeypatch.setenv("NULLSATZ_RETRY_CAP", "2")
    monkeypatch.delenv("NULLSATZ_MAX_MINORS", raising=False)
    settings = get_engine_settings()
    assert settings.retry_cap == 2
    assert settings.max_minors == DEFAULT_MAX_MINORS
    assert get_engine_settings(retry_cap=0).retry_cap == 0


def test_errors_keep_builtin_bases():
    err = PolynomialParseError("unexpected token", position=4, line=2)
    assert isinstance(err, ValueError)
    assert isinstance(err, NullsatzError)
    assert (err.position, err.line) == (4, 2)
    assert isinstance(RetryExhaustedError("gave up"), RuntimeError)


def test_logging_session_writes_job_records(tmp_path):
    file_logger = start_logging_session(str(tmp_path), session_name="wnss")
    assert get_file_logger() is file_logger
    file_logger.log_job_start("wnss", "lines.txt", {"seed": 0})
    file_logger.log_error("wnss", "lines.txt", "boom")
    file_logger.log_job_result("wnss", 0, {"answer": "Empty"})
    session_dir = file_logger.session_dir
    end_logging_session()
    assert get_file_logger() is None

    general = (session_dir / "general_execution.log").read_text(encoding="utf-8")
    assert "JOB STARTED: wnss" in general
    assert "answer: Empty" in general
    assert "LOGGING SESSION ENDED" in general
    errors = (session_dir / "errors_and_warnings.log").read_text(encoding="utf-8")
    assert "[wnss] lines.txt: boom" in errors


def test_save_csv_creates_directories(tmp_path):
    target = tmp_path / "nested" / "table.csv"
    path = save_csv(pd.DataFrame({"nu": [0, 1], "H": [1, 2]}), str(target))
    assert path == str(target)
    assert target.read_text().splitlines() == ["nu,H", "0,1", "1,2"]


@pytest.mark.parametrize("key", ["seed", "cap", "retry_cap", "max_minors", "format", "log_level", "log_dir"])
def test_env_config_keys(key):
    assert key in get_env_config()
