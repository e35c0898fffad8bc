"""
Jordanian Pipeline Builder
==========================

Builder pattern for easy pipeline construction.
"""

from typing import Any, Dict, List, Mapping, Optional, Type

from pydantic import ValidationError

from .base import BaseSuite
from .config import VerificationSettings
from .exceptions import ConfigException, PipelineException
from .pipeline import VerificationPipeline
from ..components.coloured.suite import (
    BraidSuite,
    CharacteristicSuite,
    SpecializeSuite,
    UnitaritySuite,
    YBESuite,
)
from ..components.representation.suite import ClassicalSuite, HopfSuite, QuasitriangularSuite
from ..components.rtt.suite import DeterminantSuite, RTTSuite


SUITES: Dict[str, Type[BaseSuite]] = {
    cls.name: cls
    for cls in (
        YBESuite, BraidSuite, UnitaritySuite, CharacteristicSuite, SpecializeSuite,
        HopfSuite, QuasitriangularSuite, ClassicalSuite, RTTSuite, DeterminantSuite,
    )
}


class SuiteBuilder:
    """
    Builder for VerificationPipeline

    Example:
        >>> pipeline = (SuiteBuilder()
        ...     .with_suite('ybe')
        ...     .with_suite('rtt')
        ...     .with_colours(lam='1', mu='2')
        ...     .build())
    """

    def __init__(self):
        """Initialize builder"""
        self._suites: List[BaseSuite] = []
        self._colours: Dict[str, str] = {}
        self._at: Dict[str, str] = {}
        self._settings: Dict[str, Any] = {}

    # Suites

    def with_suite(self, name: str, **config) -> 'SuiteBuilder':
        """
        Add a suite by name

        Args:
            name: Suite name (see SUITE_NAMES)
            **config: Suite configuration

        Returns:
            SuiteBuilder: Self for chaining
        """
        if name not in SUITES:
            raise PipelineException(f"Unknown suite '{name}'", {'suites': list(SUITES)})
        if any(s.name == name for s in self._suites):
            return self
        self._suites.append(SUITES[name](config))
        return self

    def with_custom_suite(self, suite: BaseSuite) -> 'SuiteBuilder':
        """
        Add a suite instance

        Returns:
            SuiteBuilder: Self for chaining
        """
        self._suites.append(suite)
        return self

    def with_all(self) -> 'SuiteBuilder':
        """Add every registered suite"""
        for name in SUITES:
            self.with_suite(name)
        return self

    # Run configuration

    def with_colours(
        self,
        lam: Optional[str] = None,
        mu: Optional[str] = None,
        nu: Optional[str] = None,
        eta: Optional[str] = None
    ) -> 'SuiteBuilder':
        """
        Set colour expressions (unset colours stay symbolic)

        Returns:
            SuiteBuilder: Self for chaining
        """
        for role, value in (('lambda', lam), ('mu', mu), ('nu', nu), ('eta', eta)):
            if value is not None:
                self._colours[role] = str(value)
        return self

    def with_at(self, bindings: Mapping[str, str]) -> 'SuiteBuilder':
        """
        Bind h, s or colour symbols to values

        Returns:
            SuiteBuilder: Self for chaining
        """
        self._at.update({str(k): str(v) for k, v in bindings.items()})
        return self

    def with_settings(self, settings: Optional[VerificationSettings] = None, **overrides) -> 'SuiteBuilder':
        """
        Set verification settings

        Args:
            settings: Complete settings object
            **overrides: Individual fields

        Returns:
            SuiteBuilder: Self for chaining
        """
        if settings is not None:
            self._settings = settings.model_dump()
        self._settings.update(overrides)
        return self

    def with_workers(self, workers: int) -> 'SuiteBuilder':
        """Run up to ``workers`` suites concurrently"""
        self._settings['workers'] = workers
        return self

    # Build Methods

    def build(self) -> VerificationPipeline:
        """
        Build pipeline with configured suites

        Returns:
            VerificationPipeline: Configured pipeline

        Raises:
            PipelineException: If no suite is configured
        """
        if not self._suites:
            raise PipelineException("No suite configured. Use with_suite() or with_all()")

        try:
            settings = VerificationSettings(**self._settings)
        except ValidationError as e:
            raise ConfigException(f"Invalid settings: {e.errors()[0]['msg']}", {'errors': e.errors()})
        return VerificationPipeline(
            suites=self._suites,
            config={'colours': dict(self._colours), 'at': dict(self._at), 'settings': settings}
        )

    def build_and_validate(self) -> VerificationPipeline:
        """
        Build pipeline and validate all suites

        Raises:
            PipelineException: If suites are invalid
        """
        pipeline = self.build()

        if not pipeline.validate_suites():
            raise PipelineException("Pipeline validation failed. Check suite configurations.")

        return pipeline

    # Preset Configurations

    @staticmethod
    def create_default() -> 'SuiteBuilder':
        """All suites, symbolic parameters"""
        return SuiteBuilder().with_all()

    @staticmethod
    def create_fast() -> 'SuiteBuilder':
        """All suites without the rank guard, one point for the degree-4 determinant check"""
        return (SuiteBuilder()
                .with_all()
                .with_settings(rank_guard_points=0))

    @staticmethod
    def create_numeric(at: Mapping[str, str]) -> 'SuiteBuilder':
        """All suites instantiated at a rational point"""
        return SuiteBuilder().with_all().with_at(at)

    def __repr__(self) -> str:
        """String representation"""
        return f"SuiteBuilder(suites=[{', '.join(s.name for s in self._suites)}])"


def create_pipeline(
    suites: Optional[List[str]] = None,
    colours: Optional[Mapping[str, str]] = None,
    at: Optional[Mapping[str, str]] = None,
    **settings
) -> VerificationPipeline:
    """
    Quick pipeline creation

    Args:
        suites: Suite names (default: all)
        colours: Role -> scalar expression
        at: Symbol -> value bindings
        **settings: VerificationSettings fields

    Returns:
        VerificationPipeline: Configured pipeline
    """
    builder = SuiteBuilder()
    if suites:
        for name in suites:
            builder.with_suite(name)
    else:
        builder.with_all()
    colours = dict(colours or {})
    builder.with_colours(colours.get('lambda'), colours.get('mu'), colours.get('nu'), colours.get('eta'))
    if at:
        builder.with_at(at)
    if settings:
        builder.with_settings(**settings)
    return builder.build()
