"""
U_{h,s}gl(2): Hopf structure and the two-dimensional representations
"""

import logging
import random

import pytest

from jordanian.components.coloured.rmatrix import coloured_R
from jordanian.components.representation.checks import (
    check_defining_relations,
    classical_r,
    classical_structure,
    rep_exponential_consistency,
    verify_hopf_axioms,
    verify_quasitriangularity,
)
from jordanian.components.representation.generators import GeneratorSymbol as G
from jordanian.components.representation.generators import TensorExpression, normalize_word
from jordanian.components.representation.hopf import (
    antipode,
    antipode_word,
    apply_counit,
    coproduct,
    coproduct_word,
    counit,
    hopf_subalgebra_closure,
)
from jordanian.components.representation.rep import (
    evaluate_tensor,
    evaluate_word,
    fundamental_rep,
    universal_R_rep,
)
from jordanian.core.exceptions import ValidationException
from jordanian.core.matrix import ParamMatrix, flip_matrix, kron
from jordanian.core.params import Deformation


WORD_LETTERS = (G.J3, G.JPLUS, G.JMINUS, G.Z, G.E)


def random_word(rng, length):
    return tuple(rng.choice(WORD_LETTERS) for _ in range(length))


def test_jminus_image(ring, eta, params):
    h, s = ring.h, ring.s
    jminus = fundamental_rep(eta, params)[G.JMINUS]
    assert jminus == ParamMatrix.from_rows(
        [[(h + eta * s) ** 2 / (2 * h), 0], [1, (h - eta * s) ** 2 / (2 * h)]], ring
    )


def test_colourless_representation(ring, params):
    h = ring.h
    jminus = fundamental_rep(0, params)[G.JMINUS]
    assert jminus == ParamMatrix.from_rows([[h / 2, 0], [1, h / 2]], ring)


def test_e_and_its_inverse(eta, params):
    rep = fundamental_rep(eta, params)
    assert (rep[G.E] * rep[G.EINV]).is_identity()


def test_defining_relations_hold(eta, params):
    report = check_defining_relations(eta, params)
    assert report.passed
    assert len(report) == 6


def test_defining_relations_with_equal_parameters(ring, eta):
    assert check_defining_relations(eta, Deformation.one_parameter(ring)).passed


def test_exponential_consistency(eta, params):
    assert rep_exponential_consistency(eta, params).passed


def test_primitive_coproducts(ring, params):
    for x in (G.JPLUS, G.Z):
        expected = TensorExpression.of(ring, [], [x]) + TensorExpression.of(ring, [x], [])
        assert coproduct(x, params) == expected


def test_coproduct_of_j3(ring, params):
    h, s = ring.h, ring.s
    t = TensorExpression.of
    expected = (
        t(ring, [], [G.J3]) + t(ring, [G.J3], [G.E])
        + t(ring, [G.Z], [G.E], coeff=s / h) - t(ring, [G.Z], [], coeff=s / h)
    )
    assert coproduct(G.J3, params) == expected


def test_grouplike_coproduct(ring, params):
    assert coproduct(G.E, params) == TensorExpression.of(ring, [G.E], [G.E])


def test_counit_and_antipode_values(ring, params):
    assert counit(G.J3, params) == ring.zero
    assert counit(G.E, params) == ring.one
    assert antipode(G.JPLUS, params) == TensorExpression.of(ring, [G.JPLUS], coeff=-1)
    assert antipode(G.E, params) == TensorExpression.of(ring, [G.EINV])


def test_antipode_of_j3(ring, params):
    h, s = ring.h, ring.s
    t = TensorExpression.of
    expected = t(ring, [G.J3, G.EINV], coeff=-1) + t(ring, [G.Z], coeff=s / h) - t(ring, [G.Z, G.EINV], coeff=s / h)
    assert antipode(G.J3, params) == expected


def test_words_cancel_grouplike_pairs():
    assert normalize_word([G.E, G.EINV, G.J3, G.ONE]) == (G.J3,)
    assert normalize_word([G.EINV, G.E]) == ()


def test_counit_axiom_on_coproduct_of_jminus(eta, params):
    delta = coproduct(G.JMINUS, params)
    single = fundamental_rep(eta, params)[G.JMINUS]
    assert evaluate_tensor(apply_counit(delta, 1, params), [eta], params) == single
    assert evaluate_tensor(apply_counit(delta, 2, params), [eta], params) == single


def test_coproduct_of_z_in_two_colours(ring, lam, mu, params):
    image = evaluate_tensor(coproduct(G.Z, params), [lam, mu], params)
    assert image == ParamMatrix.identity(4, ring).scale(lam + mu)


def test_coproduct_of_jplus_in_two_colours(ring, lam, mu, params):
    e12 = ParamMatrix.unit(2, 2, 0, 1, ring)
    eye = ParamMatrix.identity(2, ring)
    image = evaluate_tensor(coproduct(G.JPLUS, params), [lam, mu], params)
    assert image == kron(eye, e12) + kron(e12, eye)


def test_unit_evaluates_to_identity(ring, lam, mu, params):
    image = evaluate_tensor(TensorExpression.unit(ring, 2), [lam, mu], params)
    assert image.is_identity()


def test_leg_count_must_match_colours(ring, lam, params):
    with pytest.raises(ValidationException):
        evaluate_tensor(TensorExpression.unit(ring, 2), [lam], params)


@pytest.mark.parametrize('seed', range(10))
def test_coproduct_is_multiplicative(seed, lam, mu, params):
    rng = random.Random(seed)
    u, v = random_word(rng, rng.randint(1, 2)), random_word(rng, rng.randint(1, 2))
    product = evaluate_tensor(coproduct_word(u + v, params), [lam, mu], params)
    factors = (
        evaluate_tensor(coproduct_word(u, params), [lam, mu], params)
        * evaluate_tensor(coproduct_word(v, params), [lam, mu], params)
    )
    assert product == factors


@pytest.mark.parametrize('seed', range(10))
def test_antipode_reverses_products(seed, eta, params):
    rng = random.Random(seed)
    u, v = random_word(rng, 2), random_word(rng, 2)
    lhs = evaluate_tensor(antipode_word(u + v, params), [eta], params)
    rhs = (
        evaluate_tensor(antipode_word(v, params), [eta], params)
        * evaluate_tensor(antipode_word(u, params), [eta], params)
    )
    assert lhs == rhs


def test_evaluate_word_multiplies_images(eta, params):
    rep = fundamental_rep(eta, params)
    assert evaluate_word((G.JPLUS, G.JMINUS), rep) == rep[G.JPLUS] * rep[G.JMINUS]
    assert evaluate_word((), rep).is_identity()


def test_hopf_axioms(lam, mu, nu, params):
    report = verify_hopf_axioms(lam, mu, nu, params)
    assert report.passed, report.failures()


def test_borel_part_is_a_hopf_subalgebra(params):
    assert hopf_subalgebra_closure(params).passed


def test_universal_r_agrees_with_direct_construction(lam, mu, params):
    assert universal_R_rep(lam, mu, params) == coloured_R(lam, mu, params).matrix


def test_universal_r_without_colours(ring, params):
    h = ring.h
    expected = ParamMatrix.from_rows(
        [[1, h, -h, h ** 2], [0, 1, 0, h], [0, 0, 1, -h], [0, 0, 0, 1]], ring
    )
    image = universal_R_rep(0, 0, params)
    assert image == expected
    assert image.substitute({'h': 0}).is_identity()


def test_quasitriangularity(lam, mu, nu, params):
    report = verify_quasitriangularity(lam, mu, nu, params)
    assert report.passed, report.failures()


def test_classical_structure(lam, mu, nu, params):
    report = classical_structure(lam, mu, nu, params)
    assert report.passed, report.failures()


def test_classical_r_is_antisymmetric(ring, lam, mu, params):
    p = flip_matrix(2, ring)
    assert p * classical_r(mu, lam, params) * p == -classical_r(lam, mu, params)


def test_first_order_check_left_out_at_numeric_point(caplog, ring, lam, mu, nu):
    point = Deformation(ring, ring(2), ring(3))
    with caplog.at_level(logging.INFO, logger='jordanian.representation.checks'):
        report = classical_structure(lam, mu, nu, point)
    assert report.passed, report.failures()
    with pytest.raises(KeyError):
        report.get("R^(lambda,mu) - 1 - r^(lambda,mu) is of order 2 in (h, s)")
    assert "Order check left out" in caplog.text


def test_first_order_check_recorded_when_symbolic(lam, mu, nu, params):
    report = classical_structure(lam, mu, nu, params)
    entry = report.get("R^(lambda,mu) - 1 - r^(lambda,mu) is of order 2 in (h, s)")
    assert entry['status'] == 'pass'


def test_counit_and_antipode_at_both_colours(lam, mu, nu, params):
    report = verify_hopf_axioms(lam, mu, nu, params)
    for role in ('lambda', 'nu'):
        assert report.get(f"(eps x id) Delta(J3) = J3 at {role}")['status'] == 'pass'
        assert report.get(f"m (id x gamma) Delta(Jminus) = eps(Jminus) 1 at {role}")['status'] == 'pass'
