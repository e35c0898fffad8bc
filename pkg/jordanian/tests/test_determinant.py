"""
Quantum determinant and the antipode
"""

import pytest

from jordanian.components.rtt import determinant
from jordanian.components.rtt.determinant import (
    COMMUTATOR_LETTERS,
    antipode_matrices,
    commutator_rhs,
    det_commutator_report,
    formula_verdict,
    grouplike_difference,
    quantum_determinant,
    verify_antipode_inverse,
    verify_coalgebra,
    verify_determinant_forms,
    verify_grouplike,
)
from jordanian.components.rtt.linear import ideal_membership, point_membership
from jordanian.components.rtt.ncpoly import NCPoly, PairPoly, commutator, matmul, t_matrix
from jordanian.components.rtt.relations import coloured_relations
from jordanian.core.exceptions import ValidationException


def test_classical_limit_is_the_ordinary_determinant(ring, eta, params):
    (a, b), (c, d) = t_matrix(ring, eta)
    classical = {'h': 0, 's': 0}
    assert quantum_determinant(eta, params).substitute(classical) == a * d - b * c
    assert quantum_determinant(eta, params, 'alternate').substitute(classical) == a * d - c * b


def test_first_form(ring, eta, params):
    (a, b), (c, d) = t_matrix(ring, eta)
    expected = a * d - b * c - (a * c).scale(ring.h + eta * ring.s)
    assert quantum_determinant(eta, params) == expected
    assert quantum_determinant(eta, params).counit() == ring.one


def test_forms_agree_modulo_relations(eta, params):
    report = verify_determinant_forms(eta, params)
    assert report.passed, report.failures()


def test_unknown_form_rejected(eta, params):
    with pytest.raises(ValidationException):
        quantum_determinant(eta, params, 'third')


def test_antipode_matrix_entries(ring, eta, params):
    (a, b), (c, d) = t_matrix(ring, eta)
    left, _ = antipode_matrices(eta, params)
    x = ring.h - eta * ring.s
    assert matmul(left, t_matrix(ring, eta))[1][0] == -(c * a) + a * c + (c * c).scale(x)


def test_antipode_inverse(eta, params):
    report = verify_antipode_inverse(eta, params)
    assert report.passed, report.failures()
    assert len(report) == 8


def test_grouplike_against_the_identity(eta, params):
    assert grouplike_difference(eta, params, primed_identity=True) == PairPoly(params.ring)


def test_grouplike(eta, params):
    report = verify_grouplike(eta, params)
    assert report.passed, report.failures()
    assert report.get("eps(D) = 1")['details'] == {'counit': '1'}


def test_determinant_commutes_with_c(ring, lam, mu, params):
    assert commutator_rhs(lam, mu, 'c', params) == NCPoly(ring)
    with pytest.raises(ValidationException):
        commutator_rhs(lam, mu, 'e', params)


def test_commutator_report(lam, mu, params):
    report = det_commutator_report(lam, mu, params)
    assert report.passed, report.failures()
    assert len(report) == 10
    assert report.get("[D_l,c_m] - rhs in <coloured relations>")['details']['member']
    witness = report.get("[D_l,a_m] not in <coloured relations> at the witness")
    assert witness['details']['member'] is False
    pair = report.get("[D_l,D_m] not in <coloured relations>")['details']
    assert pair['member'] is False
    assert pair['consistent']
    assert pair['sector_dim'] == 1536
    assert pair['method'] == 'random points'
    assert len(pair['points']) == 3


def test_point_verdict_agrees_with_exact_elimination(ring, lam, mu, params):
    target = commutator(quantum_determinant(lam, params), NCPoly.gen(ring, 'a', mu))
    relations = coloured_relations(lam, mu, params).elements
    exact = ideal_membership(target, relations, 3, colour_order=(lam, mu))
    sampled = point_membership(target, relations, 3, colour_order=(lam, mu))
    assert exact['member'] is False
    assert sampled['member'] is False
    assert sampled['sector_dim'] == exact['sector_dim'] == 192


def test_unverified_certificate_fails_the_formula(monkeypatch, lam, mu, params):
    def unverified(*args, **kwargs):
        return {'member': True, 'sector_dim': 192, 'rank': 1,
                'certificate': {'target': 'x', 'combination': []}, 'certificate_verified': False}

    def decided(*args, **kwargs):
        return {'member': False, 'sector_dim': 1536, 'rank': 0, 'method': 'random points',
                'points': [], 'consistent': True}

    monkeypatch.setattr(determinant, 'ideal_membership', unverified)
    monkeypatch.setattr(determinant, 'point_membership', decided)
    report = det_commutator_report(lam, mu, params)
    for letter in COMMUTATOR_LETTERS:
        assert report.get(f"[D_l,{letter}_m] - rhs in <coloured relations>")['status'] == 'fail'
    assert report.get("[D_l,D_m] not in <coloured relations>")['status'] == 'pass'


@pytest.mark.parametrize('letter, result, passed', [
    ('a', {'member': True, 'certificate_verified': True}, True),
    ('a', {'member': True, 'certificate_verified': False}, False),
    ('b', {'member': False, 'residual': 'a_lambda*c_mu'}, True),
    ('d', {'member': False, 'residual': ''}, False),
    ('c', {'member': False, 'residual': 'c_lambda*c_mu'}, False),
    ('c', {'member': True, 'certificate_verified': True}, True),
])
def test_formula_verdict(letter, result, passed):
    assert formula_verdict(letter, {'sector_dim': 192, 'rank': 1, **result}) is passed


def test_coalgebra_respects_relations(lam, mu, params):
    report = verify_coalgebra(lam, mu, params)
    assert report.passed, report.failures()
    assert all(e['identity'].startswith(('eps(', 'Delta(')) for e in report)
