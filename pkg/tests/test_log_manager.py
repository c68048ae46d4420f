import os
import time

import pandas as pd
import pytest

from lieschur.exceptions import InvalidParameterError
from lieschur.log_manager import LogManager


def test_singleton():
    assert LogManager() is LogManager()


def test_logger_writes_to_file(tmp_path):
    manager = LogManager()
    manager.setup(log_config={"root_log_path": str(tmp_path)})
    log = manager.get_logger("lieschur.test")
    log.info("hello from the test")
    files = list(tmp_path.glob("lieschur.test_*.log"))
    assert len(files) == 1
    content = files[0].read_text()
    assert "hello from the test" in content
    assert "test_logger_writes_to_file" in content


def test_print_twin_echoes_to_stderr(capsys):
    log = LogManager().get_logger("lieschur.test")
    log.pwarning("visible", {"rank": 3})
    err = capsys.readouterr().err
    assert "visible" in err
    assert "rank" in err


def test_quiet_levels_do_not_print(capsys):
    log = LogManager().get_logger("lieschur.test")
    log.debug("hidden")
    assert "hidden" not in capsys.readouterr().err


def test_get_log_string():
    text = LogManager.get_log_string("dims", {"dim": 5}, pd.DataFrame({"d": [1, 2]}))
    assert text.startswith("dims")
    assert "dim" in text and "5" in text
    assert "- - -" in text
    assert "------" in text


def test_log_file_cleaner_keeps_newest(tmp_path):
    now = time.time()
    for i in range(25):
        path = tmp_path / f"old_{i:02d}.log"
        path.write_text("x")
        os.utime(path, (now - 3600 + i, now - 3600 + i))
    manager = LogManager()
    manager.setup(log_config={"root_log_path": str(tmp_path), "log_file_num_limit": 20, "log_file_day_limit": None})
    manager.log_file_cleaner()
    remaining = sorted(p.name for p in tmp_path.iterdir())
    assert len(remaining) == 20
    assert "old_00.log" not in remaining
    assert "old_24.log" in remaining


def test_log_file_cleaner_drops_expired(tmp_path):
    stale = tmp_path / "stale.log"
    stale.write_text("x")
    old = time.time() - 10 * 86400
    os.utime(stale, (old, old))
    fresh = tmp_path / "fresh.log"
    fresh.write_text("x")
    manager = LogManager()
    manager.setup(log_config={"root_log_path": str(tmp_path), "log_file_day_limit": 7})
    manager.log_file_cleaner()
    assert [p.name for p in tmp_path.iterdir()] == ["fresh.log"]


def test_get_log_injects_logger():
    @LogManager().get_log("lieschur.test", verbose=1)
    def compute(x, log=None):
        log.info(f"computing {x}")
        return x * 2

    assert compute(21) == 42


def test_get_log_reraises(capsys):
    @LogManager().get_log("lieschur.test", expected_errors=(InvalidParameterError,))
    def expected(log=None):
        raise InvalidParameterError("bad n")

    @LogManager().get_log("lieschur.test")
    def unexpected(log=None):
        raise RuntimeError("boom")

    with pytest.raises(InvalidParameterError):
        expected()
    with pytest.raises(RuntimeError):
        unexpected()


def test_get_log_line_profiling(capsys):
    @LogManager().get_log("lieschur.test", enable_profiling="line")
    def work(log=None):
        total = 0
        for i in range(100):
            total += i
        return total

    assert work() == 4950
    assert "LineProfiler Stats" in capsys.readouterr().err
