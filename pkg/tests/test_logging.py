# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
""""Testing of log module."""
from dataclasses import dataclass
import logging as deflogging  # Default logging

from beartype.typing import Callable
import pytest

from rotorchain import LOG  # Global logger
import rotorchain.logger as logger

## Notes
# Use the next fixtures for:
# - capfd: for testing console printing.
# - caplog: for testing logging printing.

LOG_LEVELS = {"CRITICAL": 50, "ERROR": 40, "WARNING": 30, "INFO": 20, "DEBUG": 10}


@dataclass
class FakeRun:
    name: str

    def get_name(self) -> str:
        return self.name


def test_stdout_reading(capfd: pytest.CaptureFixture):
    """Test for checking simple standard output reading by pytest."""
    print("This is a test")

    out, _ = capfd.readouterr()
    assert out == "This is a test\n"


def test_global_logger_exist():
    """Test for checking the accurate naming of the general Logger instance."""
    assert isinstance(LOG.logger, deflogging.Logger)
    assert LOG.logger.name == "rotorchain_global"


def test_global_logger_has_handlers():
    """Test for checking that the general Logger has file and stdout handlers implemented."""
    assert hasattr(LOG, "file_handler")
    assert hasattr(LOG, "std_out_handler")
    assert LOG.logger.hasHandlers
    assert LOG.file_handler or LOG.std_out_handler  # at least a handler is not empty


def test_global_logger_logging(caplog: pytest.LogCaptureFixture):
    """Testing the global logger at every level, restoring it to ERROR afterwards."""
    LOG.setLevel("DEBUG")
    for each_log_name, each_log_number in LOG_LEVELS.items():
        msg = f"This is an {each_log_name} message."
        LOG.logger.log(each_log_number, msg)
        # Make sure we are using the right logger, the right level and message.
        assert caplog.record_tuples[-1] == ("rotorchain_global", each_log_number, msg)

    LOG.setLevel("ERROR")
    assert isinstance(LOG.level, int)
    assert LOG.level == logger.ERROR


@pytest.mark.parametrize(
    "level",
    [
        deflogging.DEBUG,
        deflogging.INFO,
        deflogging.WARN,
        deflogging.ERROR,
        deflogging.CRITICAL,
    ],
)
def test_global_logger_debug_levels(level: int, caplog: pytest.LogCaptureFixture):
    """Testing for all the possible logging levels that each message is recorded properly."""
    with caplog.at_level(level, LOG.logger.name):
        for each_log_name, each_log_number in LOG_LEVELS.items():
            msg = f"This is a message of type {each_log_name}."
            LOG.logger.log(each_log_number, msg)
            if each_log_number >= level:
                assert caplog.record_tuples[-1] == ("rotorchain_global", each_log_number, msg)
            else:
                assert caplog.record_tuples[-1] != ("rotorchain_global", each_log_number, msg)


def test_global_logger_format(fake_record: Callable):
    """Test for checking the global logger formatter aspect.

    The console output cannot be read back through pytest, so the handler
    output is checked by faking a record.
    """
    assert "run_name" in logger.FILE_MSG_FORMAT
    assert "run_name" in logger.STDOUT_MSG_FORMAT

    log = fake_record(LOG.logger, msg="This is a message", run_name="sizes:ness-sweep")
    assert log.startswith("DEBUG - sizes:ness-sweep - ")
    assert log.endswith(" - This is a message")


def test_format_without_run_name():
    """Test that records without a run name are formatted with an empty field."""
    record = LOG.logger.makeRecord("rotorchain_global", deflogging.INFO, "fn", 0, "msg", (), None)
    assert not hasattr(record, "run_name")
    formatted = logger.RunFormatter(logger.STDOUT_MSG_FORMAT).format(record)
    assert formatted.startswith("INFO -  - ")

    assert logger.RunFilter().filter(record)
    assert record.run_name == ""


def test_global_methods(caplog: pytest.LogCaptureFixture):
    """Testing global logger methods for printing out different log messages."""
    LOG.setLevel("DEBUG")

    msg = "This is a debug message"
    LOG.debug(msg)
    assert msg in caplog.text

    msg = "This is an info message"
    LOG.info(msg)
    assert msg in caplog.text

    msg = "This is a warning message"
    LOG.warning(msg)
    assert msg in caplog.text

    msg = "This is an error message"
    LOG.error(msg)
    assert msg in caplog.text

    msg = "This is a critical message"
    LOG.critical(msg)
    assert msg in caplog.text

    msg = 'This is a 30 message using "log"'
    LOG.log(30, msg)
    assert msg in caplog.text

    LOG.setLevel("ERROR")


def test_log_to_file(tmp_path_factory: pytest.TempPathFactory):
    """Testing writing to log file at the ERROR level and then at the DEBUG level."""
    file_path = tmp_path_factory.mktemp("log_files") / "rotorchain.log"
    file_msg_error = "This is a error message"
    file_msg_debug = "This is a debug message"

    LOG.setLevel("ERROR")
    LOG.log_to_file(str(file_path), level=logger.ERROR)
    handler = LOG.file_handler
    try:
        LOG.error(file_msg_error)
        LOG.debug(file_msg_debug)

        text = file_path.read_text()
        assert "NEW SESSION" in text
        assert file_msg_error in text
        assert file_msg_debug not in text

        LOG.setLevel("DEBUG")
        file_msg_debug = "This debug message should be recorded."
        LOG.debug(file_msg_debug)
        assert file_msg_debug in file_path.read_text()
    finally:
        LOG.logger.removeHandler(handler)
        handler.close()
        LOG.setLevel("ERROR")


def test_run_logger(tmp_path_factory: pytest.TempPathFactory):
    """Test that a run logger stamps the current name of its run."""
    file_path = tmp_path_factory.mktemp("log_files") / "run.log"
    run = FakeRun("currents-f:ness-sweep")

    run_log = LOG.add_run_logger("rotorchain.test_run", run, level="DEBUG")
    assert LOG["rotorchain.test_run"] is run_log
    assert run_log.logger.propagate is False

    run_log.log_to_file(str(file_path), level=logger.DEBUG)
    run_log.info("Point 3/51 solved")
    run.name = "currents-phi:ness-sweep"
    run_log.info("Point 4/51 solved")
    run_log.logger.removeHandler(run_log.file_handler)
    run_log.file_handler.close()

    text = file_path.read_text()
    assert "INFO - currents-f:ness-sweep - test_logging - test_run_logger - Point 3/51" in text
    assert "INFO - currents-phi:ness-sweep - test_logging - test_run_logger - Point 4/51" in text

    with pytest.raises(KeyError, match="There is no instances"):
        LOG["rotorchain.missing"]
