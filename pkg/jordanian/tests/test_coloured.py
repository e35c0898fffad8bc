"""
Coloured R-matrix: construction, Yang-Baxter, unitarity, spectrum, limits
"""

from fractions import Fraction

import pytest

from jordanian.components.coloured.checks import (
    braided_ybe_residual,
    one_parameter_check,
    verify_braided_ybe,
    verify_characteristic_equation,
    verify_coloured_unitarity,
    verify_coloured_ybe,
    verify_specializations,
    verify_universal_agreement,
    ybe_residual,
)
from jordanian.components.coloured.rmatrix import braid_operator, coloured_R, specialize
from jordanian.core.exceptions import ValidationException
from jordanian.core.matrix import ParamMatrix, flip_matrix, mat_inverse
from jordanian.core.params import Deformation
from jordanian.core.scalars import f_scalar, is_polynomial, scalar_ring


@pytest.fixture
def rational_point():
    ring = scalar_ring()
    return Deformation(ring, ring(Fraction(2, 3)), ring(Fraction(1, 5)))


def test_entries(ring, lam, mu, params):
    h, s = ring.h, ring.s
    r = coloured_R(lam, mu, params)
    assert r.matrix[0, 1] == h + lam * s
    assert r.matrix[0, 2] == -(h + mu * s)
    assert r.matrix[0, 3] == f_scalar(lam, mu)
    assert r.matrix[1, 3] == h - mu * s
    assert r.matrix[2, 3] == -(h - lam * s)
    assert r.invariant_violations() == []
    assert all(is_polynomial(x) for x in r.matrix.entries)


def test_colourless_matrix(ring, params):
    h = ring.h
    r = coloured_R(0, 0, params).matrix
    assert r == ParamMatrix.from_rows([[1, h, -h, h ** 2], [0, 1, 0, h], [0, 0, 1, -h], [0, 0, 0, 1]], ring)


def test_two_parameter_preset(ring, lam, mu, params):
    special = specialize(coloured_R(lam, mu, params), preset='two-parameter')
    target = special.ring
    z, zprime = target.gen('z'), target.gen('zprime')
    assert special.matrix[0, 3] == z * zprime
    assert special.matrix[0, 1] == zprime
    assert special.matrix[1, 3] == z


def test_specialize_without_bindings_is_identity(lam, mu, params):
    r = coloured_R(lam, mu, params)
    assert specialize(r, {}).matrix == r.matrix
    assert specialize(r, {'lambda': lam}).matrix == r.matrix


def test_specialize_by_bindings(ring, lam, mu, params):
    special = specialize(coloured_R(lam, mu, params), {'lambda': 0, 'mu': 0})
    assert special.matrix == coloured_R(0, 0, params).matrix


def test_unknown_preset_rejected(lam, mu, params):
    with pytest.raises(ValidationException):
        specialize(coloured_R(lam, mu, params), preset='three-parameter')


def test_preset_needs_colour_symbols(params):
    with pytest.raises(ValidationException):
        specialize(coloured_R(1, 2, params), preset='one-parameter')


def test_coloured_ybe_symbolic(lam, mu, nu, params):
    assert ybe_residual(lam, mu, nu, params).is_zero()
    assert verify_coloured_ybe(lam, mu, nu, params).passed


def test_coloured_ybe_without_colours(params):
    assert ybe_residual(0, 0, 0, params).is_zero()


def test_coloured_ybe_at_rational_point(rational_point):
    assert verify_coloured_ybe(1, -2, 7, rational_point).passed


def test_universal_agreement(lam, mu, params):
    assert verify_universal_agreement(lam, mu, params).passed


def test_unitarity(lam, mu, params):
    report = verify_coloured_unitarity(lam, mu, params)
    assert report.passed
    assert len(report) == 2


def test_unitarity_at_equal_colours(lam, params):
    assert verify_coloured_unitarity(lam, lam, params).passed


def test_colour_swap_inverts(ring, lam, mu, params):
    p = flip_matrix(2, ring)
    swapped = p * coloured_R(mu, lam, params).matrix * p
    assert swapped == mat_inverse(coloured_R(lam, mu, params).matrix)


def test_braid_operator_is_flip_times_r(ring, lam, mu, params):
    expected = flip_matrix(2, ring) * coloured_R(lam, mu, params).matrix
    assert braid_operator(lam, mu, params).matrix == expected


def test_braided_ybe(lam, mu, nu, params):
    assert braided_ybe_residual(lam, mu, nu, params).is_zero()
    assert verify_braided_ybe(lam, mu, nu, params).passed


def test_braided_ybe_equal_colours(lam, params):
    assert verify_braided_ybe(lam, lam, lam, params).passed


def test_braided_ybe_at_rational_point(rational_point):
    assert verify_braided_ybe(1, -2, 7, rational_point).passed


def test_braid_squares_to_one_at_equal_colours(eta, params):
    braid = braid_operator(eta, eta, params).matrix
    assert (braid * braid).is_identity()


def test_characteristic_equation(lam, mu, params):
    report = verify_characteristic_equation(lam, mu, params)
    assert report.passed, report.failures()
    witness = report.get("(Rh - 1)(Rh + 1) != 0 and (Rh - 1)^2 (Rh + 1) != 0 at the witness")
    assert witness['details']['hecke_product_vanishes'] is False
    assert witness['details']['quartic_product_vanishes'] is True


def test_equal_colour_witness_fails(lam, mu, params):
    report = verify_characteristic_equation(lam, mu, params, {'h': '1', 's': '1', 'lambda': '2', 'mu': '2'})
    assert not report.passed
    assert report.failed_count == 1


def test_specializations():
    assert verify_specializations().passed


def test_one_parameter_case(eta, lam, mu, nu, params):
    report = one_parameter_check(eta, lam, mu, nu, params)
    assert report.passed, report.failures()
    assert all(entry['identity'].startswith('s = h: ') for entry in report)
