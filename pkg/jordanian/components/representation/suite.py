"""
Representation Suites
=====================

Hopf algebra, quasitriangularity and classical-limit suites.
"""

from ...core.base import BaseSuite, SuiteContext
from ...core.report import VerificationReport
from ..coloured.checks import one_parameter_check
from .checks import (
    check_defining_relations,
    classical_structure,
    rep_exponential_consistency,
    verify_hopf_axioms,
    verify_quasitriangularity,
)
from .hopf import hopf_subalgebra_closure


class HopfSuite(BaseSuite):
    """
    Defining relations in π_η, Hopf axioms, closure of the Borel part,
    π(E) = exp(2h π(J+)) and the one-parameter case s = h

    Config:
        one_parameter: Include the s = h entries (default: True)
    """

    name = 'hopf'

    def config_keys(self) -> tuple:
        return ('one_parameter',)

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        params = context.params
        report.extend(check_defining_relations(context.eta, params))
        report.extend(verify_hopf_axioms(context.lam, context.mu, context.nu, params))
        report.extend(hopf_subalgebra_closure(params))
        report.extend(rep_exponential_consistency(context.eta, params))
        if self.config.get('one_parameter', True):
            report.extend(one_parameter_check(context.eta, context.lam, context.mu, context.nu, params))
        return report


class QuasitriangularSuite(BaseSuite):
    """Intertwining and fusion identities of the universal R-matrix"""

    name = 'quasitriangular'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(verify_quasitriangularity(context.lam, context.mu, context.nu, context.params))
        return report


class ClassicalSuite(BaseSuite):
    """Classical r-matrix, CYBE and cocommutators"""

    name = 'classical'

    def run(self, context: SuiteContext) -> VerificationReport:
        report = VerificationReport(self.name)
        report.extend(classical_structure(context.lam, context.mu, context.nu, context.params))
        return report
