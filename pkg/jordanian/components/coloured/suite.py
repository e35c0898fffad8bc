"""
Coloured R-Matrix Suites
========================
"""

from ...core.base import BaseSuite, SuiteContext
from ...core.report import VerificationReport
from .checks import (
    verify_braided_ybe,
    verify_characteristic_equation,
    verify_coloured_unitarity,
    verify_coloured_ybe,
    verify_specializations,
    verify_universal_agreement,
)


class YBESuite(BaseSuite):
    """Coloured YBE and agreement of R with the universal R-matrix"""

    name = 'ybe'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        params = context.params
        report.extend(verify_coloured_ybe(context.lam, context.mu, context.nu, params))
        report.extend(verify_universal_agreement(
            context.lam, context.mu, params, context.settings.nilpotency_bound
        ))
        return report


class BraidSuite(BaseSuite):
    name = 'braid'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(verify_braided_ybe(context.lam, context.mu, context.nu, context.params))
        return report


class UnitaritySuite(BaseSuite):
    name = 'unitarity'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(verify_coloured_unitarity(context.lam, context.mu, context.params))
        return report


class CharacteristicSuite(BaseSuite):
    """(R̂-1)^3 (R̂+1) = 0 and failure of the Hecke condition at the witness"""

    name = 'char-eq'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(verify_characteristic_equation(
            context.lam, context.mu, context.params, context.settings.hecke_witness
        ))
        return report


class SpecializeSuite(BaseSuite):
    """
    Two-parameter and one-parameter limits

    Always symbolic: the presets rename λ, μ and h, so the run's colours and
    ``--at`` bindings do not apply.
    """

    name = 'specialize'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(verify_specializations())
        return report
