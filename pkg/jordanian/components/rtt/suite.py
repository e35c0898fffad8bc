"""
RTT Suites
==========
"""

from ...core.base import BaseSuite, SuiteContext
from ...core.report import VerificationReport
from .determinant import (
    det_commutator_report,
    verify_antipode_inverse,
    verify_coalgebra,
    verify_determinant_forms,
    verify_grouplike,
)
from .relations import antisymmetry_consistency, verify_gl_zz, verify_rtt_equivalence


class RTTSuite(BaseSuite):
    """
    RTT residual versus the closed-form relations, antisymmetry, the GL_(z,z')
    limit and compatibility of the coalgebra with the relations

    Config:
        coalgebra: Include the coalgebra entries (default: True)
    """

    name = 'rtt'

    def config_keys(self) -> tuple:
        return ('coalgebra',)

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        params, settings = context.params, context.settings
        report.extend(verify_rtt_equivalence(context.lam, context.mu, params, settings))
        report.extend(antisymmetry_consistency(context.lam, context.mu, params))
        report.extend(verify_gl_zz(context.eta, params, settings))
        if self.config.get('coalgebra', True):
            report.extend(verify_coalgebra(context.lam, context.mu, params, settings))
        return report


class DeterminantSuite(BaseSuite):
    """Quantum determinant: forms, antipode inverse, grouplike, commutators"""

    name = 'determinant'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        params, settings = context.params, context.settings
        self.logger.debug(f"Determinant identities at colours {context.describe()}")
        report.extend(verify_determinant_forms(context.lam, params, settings))
        report.extend(verify_antipode_inverse(context.lam, params, settings))
        report.extend(verify_grouplike(context.lam, params, settings))
        report.extend(det_commutator_report(context.lam, context.mu, params, settings))
        return report
