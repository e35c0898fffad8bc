"""
Jordanian Verification Reports
==============================

Structured pass/fail record of every identity a suite checks. Checks never
abort on the first failure: each outcome, including an exception raised
while checking one identity, becomes an entry.
"""

from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple
import logging

from .matrix import ParamMatrix
from .types import ReportEntry
from ..utils.serialization import matrix_to_json


logger = logging.getLogger('jordanian.report')


class VerificationReport:
    """Ordered list of identity outcomes"""

    def __init__(self, name: str = 'report'):
        self.name = name
        self.entries: List[ReportEntry] = []

    def add_matrix_identity(
        self,
        identity: str,
        residual: ParamMatrix,
        details: Optional[Dict[str, Any]] = None
    ) -> ReportEntry:
        """
        Record ``residual == 0``

        Args:
            identity: Human-readable identity name
            residual: Left side minus right side
            details: Extra data stored with the entry

        Returns:
            ReportEntry: The recorded entry
        """
        passed = residual.is_zero()
        entry: ReportEntry = {
            'identity': identity,
            'status': 'pass' if passed else 'fail',
            'residual': None if passed else matrix_to_json(residual),
        }
        if details:
            entry['details'] = details
        return self._append(entry)

    def add_fact(
        self,
        identity: str,
        passed: bool,
        details: Optional[Dict[str, Any]] = None,
        residual: Optional[ParamMatrix] = None
    ) -> ReportEntry:
        """Record a boolean outcome (non-vanishing witnesses, membership verdicts)"""
        entry: ReportEntry = {
            'identity': identity,
            'status': 'pass' if passed else 'fail',
            'residual': matrix_to_json(residual) if residual is not None and not passed else None,
        }
        if details:
            entry['details'] = details
        return self._append(entry)

    def add_error(self, identity: str, error: Exception) -> ReportEntry:
        """Record an identity whose check raised"""
        entry: ReportEntry = {
            'identity': identity,
            'status': 'fail',
            'residual': None,
            'details': {'error': str(error), 'error_type': error.__class__.__name__},
        }
        return self._append(entry)

    def check_matrix(
        self,
        identity: str,
        compute: Callable[[], ParamMatrix],
        details: Optional[Dict[str, Any]] = None
    ) -> ReportEntry:
        """Run ``compute`` and record its residual; exceptions become failures"""
        try:
            residual = compute()
        except Exception as e:
            return self.add_error(identity, e)
        return self.add_matrix_identity(identity, residual, details)

    def check_fact(
        self,
        identity: str,
        compute: Callable[[], Tuple[bool, Dict[str, Any]]]
    ) -> ReportEntry:
        """Run ``compute`` returning (passed, details); exceptions become failures"""
        try:
            passed, details = compute()
        except Exception as e:
            return self.add_error(identity, e)
        return self.add_fact(identity, passed, details)

    def extend(self, other: 'VerificationReport') -> None:
        for entry in other.entries:
            self._append(dict(entry))

    def add_entry(self, entry: ReportEntry) -> ReportEntry:
        """Record a prepared entry"""
        return self._append(dict(entry))

    def _append(self, entry: ReportEntry) -> ReportEntry:
        self.entries.append(entry)
        if entry['status'] == 'pass':
            logger.debug(f"[{self.name}] pass: {entry['identity']}")
        else:
            logger.warning(f"[{self.name}] FAIL: {entry['identity']}")
        return entry

    @property
    def passed(self) -> bool:
        return all(e['status'] == 'pass' for e in self.entries)

    @property
    def passed_count(self) -> int:
        return sum(1 for e in self.entries if e['status'] == 'pass')

    @property
    def failed_count(self) -> int:
        return len(self.entries) - self.passed_count

    def failures(self) -> List[ReportEntry]:
        return [e for e in self.entries if e['status'] != 'pass']

    def get(self, identity: str) -> ReportEntry:
        for entry in self.entries:
            if entry['identity'] == identity:
                return entry
        raise KeyError(identity)

    def to_json(self, suite: Optional[str] = None) -> List[ReportEntry]:
        """Entries as plain dicts, optionally tagged with a suite name"""
        if suite is None:
            return [dict(e) for e in self.entries]
        return [{**e, 'suite': suite} for e in self.entries]

    def __iter__(self) -> Iterator[ReportEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        return f"VerificationReport({self.name!r}, passed={self.passed_count}, failed={self.failed_count})"
