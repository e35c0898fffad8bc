"""
Jordanian Logging System
========================

Session logs for verification runs:
- Current log: the last session only
- Archive log: every session, appended
- Console: stderr, so emitted matrices on stdout stay byte-stable

Suites and sector eliminations record their timing with :func:`timed`;
the pipeline closes each suite with :func:`log_suite_outcome`.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any, Iterator, Mapping, Sequence
import logging
import sys
import time

from ..__version__ import __version__


ROOT_LOGGER = 'jordanian'

LOG_FORMAT = '[%(asctime)s] [%(levelname)s] [%(name)s] [%(threadName)s] %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class JordanianLogger:
    """
    File and console handlers of the ``jordanian`` logger tree

    One instance per CLI session. Files go to ``log_dir``:
    ``jordanian_current.log`` is rewritten, ``jordanian_archive.log`` grows.
    """

    def __init__(
        self,
        log_dir: str = "logs",
        log_level: int = logging.DEBUG,
        console_output: bool = True,
        console_level: int = logging.WARNING
    ):
        """
        Args:
            log_dir: Directory for the log files (created if missing)
            log_level: Level of the file handlers
            console_output: Attach a stderr handler
            console_level: Level of the stderr handler
        """
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(exist_ok=True, parents=True)
        self.current_log = self.log_dir / "jordanian_current.log"
        self.archive_log = self.log_dir / "jordanian_archive.log"

        root = logging.getLogger(ROOT_LOGGER)
        root.setLevel(log_level)
        _detach(root)

        formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)
        handlers = [
            logging.FileHandler(self.current_log, mode='w', encoding='utf-8'),
            logging.FileHandler(self.archive_log, mode='a', encoding='utf-8'),
        ]
        for handler in handlers:
            handler.setLevel(log_level)
        if console_output:
            console = logging.StreamHandler(sys.stderr)
            console.setLevel(console_level)
            handlers.append(console)
        for handler in handlers:
            handler.setFormatter(formatter)
            root.addHandler(handler)

        root.info("=" * 80)
        root.info(f"Jordanian {__version__} session started at {datetime.now().isoformat(timespec='seconds')}")
        root.info(f"Log directory: {self.log_dir.absolute()}")
        root.info("=" * 80)

    def get_logger(self, name: str = ROOT_LOGGER) -> logging.Logger:
        """Logger below ``jordanian``: 'rtt' -> 'jordanian.rtt'"""
        if not name.startswith(ROOT_LOGGER):
            name = f'{ROOT_LOGGER}.{name}'
        return logging.getLogger(name)

    def close(self) -> None:
        """Detach and close every handler"""
        _detach(logging.getLogger(ROOT_LOGGER))


def _detach(root: logging.Logger) -> None:
    for handler in list(root.handlers):
        handler.close()
        root.removeHandler(handler)


@dataclass
class Stopwatch:
    """Elapsed wall time of a :func:`timed` block"""
    started: float
    seconds: float = 0.0


@contextmanager
def timed(logger: logging.Logger, label: str, level: int = logging.DEBUG) -> Iterator[Stopwatch]:
    """
    Log the wall time of a block

    Example:
        >>> with timed(logger, "membership in sector 2*lambda + 1*mu") as clock:
        ...     solve()
        >>> clock.seconds
    """
    clock = Stopwatch(time.perf_counter())
    try:
        yield clock
    finally:
        clock.seconds = time.perf_counter() - clock.started
        logger.log(level, f"{label}: {clock.seconds:.3f} s")


def largest_sector(entries: Sequence[Mapping[str, Any]]) -> int:
    """Largest ``details.sector_dim`` among report entries (0 when none)"""
    dims = [e.get('details', {}).get('sector_dim', 0) for e in entries]
    return max([d for d in dims if isinstance(d, int)], default=0)


def log_suite_outcome(logger: logging.Logger, name: str, report, seconds: float) -> None:
    """One summary line per suite: counts, largest sector and time"""
    sector = largest_sector(report.entries)
    where = f", largest sector {sector}" if sector else ""
    if report.passed:
        logger.info(f"✓ {name}: {report.passed_count}/{len(report)} identities in {seconds:.2f} s{where}")
    else:
        logger.error(
            f"✗ {name}: {report.failed_count} of {len(report)} identities failed in {seconds:.2f} s{where}"
        )
        for entry in report.failures():
            logger.error(f"  - {entry['identity']}")


def setup_logging(
    log_dir: str = "logs",
    log_level: int = logging.DEBUG,
    console_output: bool = True,
    console_level: int = logging.WARNING
) -> JordanianLogger:
    """
    Quick setup for logging system

    Example:
        >>> logger_system = setup_logging()
        >>> logger = logger_system.get_logger('rtt')
        >>> logger.info("Sector elimination started")
    """
    return JordanianLogger(
        log_dir=log_dir,
        log_level=log_level,
        console_output=console_output,
        console_level=console_level
    )
