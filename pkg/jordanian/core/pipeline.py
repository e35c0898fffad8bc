"""
Jordanian Pipeline
==================

Verification pipeline orchestrator.
"""

from concurrent.futures import ThreadPoolExecutor
from datetime import datetime
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import logging

from .base import BaseSuite, SuiteContext, build_context
from .config import VerificationSettings
from .exceptions import PipelineException
from .report import VerificationReport
from .types import RunResult, SuiteInfo
from ..__version__ import __version__
from ..utils.logging import log_suite_outcome, timed


class VerificationPipeline:
    """
    Complete verification pipeline

    Orchestrates a run:
    1. Resolve colours and bindings into a context
    2. Run every suite (concurrently with ``workers`` > 1)
    3. Assemble the reports sorted by suite name
    """

    def __init__(
        self,
        suites: Sequence[BaseSuite],
        config: Optional[Dict[str, Any]] = None
    ):
        """
        Initialize pipeline

        Args:
            suites: Suites to run
            config: Pipeline configuration:
                - colours: Role -> scalar expression (default: symbolic)
                - at: Symbol -> value bindings (default: none)
                - settings: VerificationSettings (default: field defaults)
        """
        if not suites:
            raise PipelineException("Pipeline needs at least one suite")
        names = [s.name for s in suites]
        if len(set(names)) != len(names):
            raise PipelineException("Duplicate suites", {'suites': names})

        self.suites = list(suites)
        self.config = config or {}
        self.colours: Dict[str, str] = dict(self.config.get('colours') or {})
        self.at: Dict[str, str] = dict(self.config.get('at') or {})
        self.settings: VerificationSettings = self.config.get('settings') or VerificationSettings()
        self.logger = logging.getLogger('jordanian.pipeline')

    def run(self, at: Optional[Mapping[str, str]] = None) -> RunResult:
        """
        Run every suite

        Args:
            at: Bindings for this run (overrides config)

        Returns:
            RunResult: Reports keyed by suite name plus metadata
        """
        bindings = dict(self.at if at is None else at)
        self.logger.info("=" * 80)
        self.logger.info(f"Starting verification of {len(self.suites)} suites")
        self.logger.info(f"Bindings: {bindings or 'symbolic'}")
        self.logger.info("=" * 80)

        result: RunResult = {
            'success': False,
            'reports': {},
            'errors': [],
            'warnings': [],
            'metadata': {
                'start_time': datetime.now().isoformat(),
                'version': __version__,
                'suites': [s.name for s in self.suites],
            }
        }

        try:
            context = build_context(self.colours, bindings, self.settings)
        except Exception as e:
            error_msg = f"Cannot build context: {e}"
            self.logger.error(error_msg)
            result['errors'].append(error_msg)
            return result
        result['metadata']['context'] = context.describe()

        outcomes = self._run_suites(context)
        summaries: List[SuiteInfo] = []
        for name in sorted(outcomes):
            report, seconds = outcomes[name]
            result['reports'][name] = report.to_json(suite=name)
            summaries.append({
                'name': name,
                'passed': report.passed_count,
                'failed': report.failed_count,
                'seconds': round(seconds, 3),
            })
            log_suite_outcome(self.logger, name, report, seconds)
            if not report.passed:
                result['errors'].append(f"{name}: {report.failed_count} of {len(report)} identities failed")

        result['metadata']['summary'] = summaries
        result['metadata']['end_time'] = datetime.now().isoformat()
        result['success'] = not result['errors']

        self.logger.info("=" * 80)
        if result['success']:
            self.logger.info("Verification completed successfully")
        else:
            self.logger.info(f"Verification finished with {len(result['errors'])} failing suites")
        self.logger.info("=" * 80)
        return result

    def _run_suites(self, context: SuiteContext) -> Dict[str, Tuple[VerificationReport, float]]:
        workers = min(self.settings.workers, len(self.suites))
        if workers <= 1:
            return {suite.name: self._run_one(suite, context) for suite in self.suites}
        self.logger.info(f"Running suites on {workers} workers")
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {suite.name: executor.submit(self._run_one, suite, context) for suite in self.suites}
            return {name: future.result() for name, future in futures.items()}

    def _run_one(self, suite: BaseSuite, context: SuiteContext) -> Tuple[VerificationReport, float]:
        """Run a suite; an exception becomes a failed entry of its report"""
        self.logger.info(f"Running suite '{suite.name}'")
        with timed(self.logger, f"Suite '{suite.name}' finished") as clock:
            try:
                if not suite.is_initialized():
                    suite.initialize()
                report = suite.run(context)
            except Exception as e:
                self.logger.error(f"Suite '{suite.name}' aborted: {e}")
                report = VerificationReport(suite.name)
                report.add_error(f"suite {suite.name} completed", e)
        return report, clock.seconds

    def run_batch(self, points: Sequence[Mapping[str, str]]) -> List[RunResult]:
        """
        Run the pipeline at several binding points

        Args:
            points: One binding map per run

        Returns:
            List[RunResult]: Results for each point
        """
        results = []
        total = len(points)

        self.logger.info(f"Processing batch of {total} points")

        for i, point in enumerate(points):
            self.logger.info(f"Processing point {i + 1}/{total}: {dict(point)}")
            result = self.run(at=point)
            results.append(result)

            if result['success']:
                self.logger.info(f"✓ Point {i + 1}/{total} passed")
            else:
                self.logger.error(f"✗ Point {i + 1}/{total} failed: {result['errors']}")

        self.logger.info(f"Batch complete: {sum(1 for r in results if r['success'])}/{total} passed")
        return results

    def validate_suites(self) -> bool:
        """
        Validate all suites

        Returns:
            bool: True if all suites are valid
        """
        self.logger.info("Validating suites...")

        all_valid = True
        errors = []

        for suite in self.suites:
            try:
                if not suite.is_initialized():
                    suite.initialize()
                if not suite.validate_config():
                    error_msg = f"{suite.name} configuration is invalid"
                    self.logger.error(error_msg)
                    errors.append(error_msg)
                    all_valid = False
                else:
                    self.logger.debug(f"✓ {suite.name} validated")
            except Exception as e:
                error_msg = f"{suite.name} validation failed: {e}"
                self.logger.error(error_msg)
                errors.append(error_msg)
                all_valid = False

        if not all_valid:
            self.logger.error("=" * 60)
            self.logger.error("VALIDATION ERRORS:")
            for error in errors:
                self.logger.error(f"  - {error}")
            self.logger.error("=" * 60)

        return all_valid

    def get_pipeline_info(self) -> Dict[str, Any]:
        """
        Get pipeline information

        Returns:
            Dict: Complete pipeline info
        """
        return {
            'suites': [suite.get_info() for suite in self.suites],
            'colours': dict(self.colours),
            'at': dict(self.at),
            'settings': self.settings.model_dump(),
            'version': __version__,
        }

    def __repr__(self) -> str:
        """String representation"""
        return f"VerificationPipeline(suites=[{', '.join(s.name for s in self.suites)}])"
