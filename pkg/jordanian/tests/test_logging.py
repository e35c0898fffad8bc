"""
Session logs, timing and suite summaries
"""

import logging

import pytest

from jordanian.core.report import VerificationReport
from jordanian.utils.logging import largest_sector, log_suite_outcome, setup_logging, timed


@pytest.fixture
def logger_system(log_dir):
    system = setup_logging(log_dir=str(log_dir), console_output=False)
    yield system
    system.close()


def current_text(system) -> str:
    for handler in logging.getLogger('jordanian').handlers:
        handler.flush()
    return system.current_log.read_text(encoding='utf-8')


def test_log_files_created(logger_system, log_dir):
    assert logger_system.current_log == log_dir / 'jordanian_current.log'
    assert logger_system.archive_log.exists()
    assert "session started" in current_text(logger_system)


def test_logger_names(logger_system):
    assert logger_system.get_logger('rtt').name == 'jordanian.rtt'
    assert logger_system.get_logger('jordanian.pipeline').name == 'jordanian.pipeline'
    assert logger_system.get_logger().name == 'jordanian'


def test_current_log_overwritten_archive_kept(log_dir):
    first = setup_logging(log_dir=str(log_dir), console_output=False)
    first.get_logger().info("first run")
    first.close()

    second = setup_logging(log_dir=str(log_dir), console_output=False)
    second.get_logger().info("second run")
    assert "first run" not in current_text(second)
    archive = second.archive_log.read_text(encoding='utf-8')
    assert "first run" in archive and "second run" in archive
    second.close()


def test_timed_block_is_logged(logger_system):
    logger = logger_system.get_logger('rtt')
    with timed(logger, "membership in sector 2*lambda") as clock:
        pass
    assert clock.seconds >= 0
    assert "[jordanian.rtt]" in current_text(logger_system)
    assert "membership in sector 2*lambda: " in current_text(logger_system)


def test_largest_sector():
    entries = [
        {'identity': 'a', 'status': 'pass', 'residual': None, 'details': {'sector_dim': 192}},
        {'identity': 'b', 'status': 'pass', 'residual': None, 'details': {'sector_dim': 1536}},
        {'identity': 'c', 'status': 'pass', 'residual': None},
    ]
    assert largest_sector(entries) == 1536
    assert largest_sector([]) == 0


def test_suite_outcome_lines(logger_system):
    logger = logger_system.get_logger('pipeline')
    report = VerificationReport('rtt')
    report.add_fact("x in I", True, {'sector_dim': 32})
    log_suite_outcome(logger, 'rtt', report, 0.5)
    report.add_fact("y in I", False)
    log_suite_outcome(logger, 'rtt', report, 0.5)
    text = current_text(logger_system)
    assert "✓ rtt: 1/1 identities in 0.50 s, largest sector 32" in text
    assert "✗ rtt: 1 of 2 identities failed" in text
    assert "  - y in I" in text


def test_close_detaches_handlers(log_dir):
    system = setup_logging(log_dir=str(log_dir), console_output=False)
    system.close()
    assert logging.getLogger('jordanian').handlers == []
