"""
Tensor matrices: products, Kronecker structure, leg embeddings, exponentials
"""

import random

import pytest

from jordanian.components.coloured.rmatrix import coloured_R
from jordanian.components.representation.generators import GeneratorSymbol as G
from jordanian.components.representation.rep import cartan_image, fundamental_rep
from jordanian.core.exceptions import MatrixException
from jordanian.core.matrix import (
    ParamMatrix,
    commutator,
    flip_matrix,
    kron,
    kron_all,
    leg_embed,
    mat_inverse,
    nilpotent_exp,
)
from jordanian.core.scalars import scalar_ring

SEEDS = range(100)


def random_matrix(ring, rng, n, random_poly):
    return ParamMatrix.from_rows([[random_poly(rng, terms=2, degree=1) for _ in range(n)] for _ in range(n)], ring)


def test_identity_is_neutral(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    eye = ParamMatrix.identity(4, ring)
    assert eye * r == r
    assert r * eye == r


def test_fundamental_images(ring, eta, params):
    rep = fundamental_rep(eta, params)
    h, s = ring.h, ring.s
    assert (rep[G.JPLUS] * rep[G.JPLUS]).is_zero()
    assert commutator(rep[G.JPLUS], rep[G.JMINUS]) == ParamMatrix.from_rows([[1, -2 * eta * s], [0, -1]], ring)
    assert rep[G.JMINUS][0, 0] == (h + eta * s) ** 2 / (2 * h)


def test_kron_of_identities(ring):
    assert kron(ParamMatrix.identity(2, ring), ParamMatrix.identity(2, ring)) == ParamMatrix.identity(4, ring)


def test_kron_positions(ring):
    e12 = ParamMatrix.unit(2, 2, 0, 1, ring)
    product = kron(e12, ParamMatrix.identity(2, ring))
    assert sorted((i, j) for i, j, _ in product.nonzero_entries()) == [(0, 2), (1, 3)]
    assert kron_all([e12, e12, e12]).nonzero_entries()[0][:2] == (0, 7)


@pytest.mark.parametrize('seed', SEEDS)
def test_kron_mixed_product(seed, ring, random_poly):
    rng = random.Random(seed)
    a, b, c, d = (random_matrix(ring, rng, 2, random_poly) for _ in range(4))
    assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


def test_flip(ring):
    p = flip_matrix(2, ring)
    assert sorted((i, j) for i, j, _ in p.nonzero_entries()) == [(0, 0), (1, 2), (2, 1), (3, 3)]
    assert (p * p).is_identity()


@pytest.mark.parametrize('seed', SEEDS)
def test_flip_exchanges_kron_factors(seed, ring, random_poly):
    rng = random.Random(seed)
    a, b = random_matrix(ring, rng, 2, random_poly), random_matrix(ring, rng, 2, random_poly)
    p = flip_matrix(2, ring)
    assert p * kron(a, b) * p == kron(b, a)


def test_leg_embed_of_identity(ring):
    assert leg_embed(ParamMatrix.identity(4, ring), (1, 2), 2) == ParamMatrix.identity(8, ring)


def test_leg_embed_flip_on_outer_legs(ring):
    embedded = leg_embed(flip_matrix(2, ring), (1, 3), 2)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                source = 4 * i + 2 * j + k
                image = 4 * k + 2 * j + i
                assert embedded[image, source] == ring.one
    assert len(embedded.nonzero_entries()) == 8


def test_leg_embed_adjacent_legs(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    eye = ParamMatrix.identity(2, ring)
    assert leg_embed(r, (1, 2), 2) == kron(r, eye)
    assert leg_embed(r, (2, 3), 2) == kron(eye, r)


def test_leg_embed_outer_legs_is_conjugated(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    eye = ParamMatrix.identity(2, ring)
    exchange = kron(eye, flip_matrix(2, ring))
    assert leg_embed(r, (1, 3), 2) == exchange * kron(r, eye) * exchange


def test_leg_embed_reversed_legs(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    p = flip_matrix(2, ring)
    assert leg_embed(r, (2, 1), 2) == kron(p * r * p, ParamMatrix.identity(2, ring))


def test_leg_embed_rejects_bad_legs(ring):
    with pytest.raises(MatrixException):
        leg_embed(ParamMatrix.identity(4, ring), (1, 1), 2)
    with pytest.raises(MatrixException):
        leg_embed(ParamMatrix.identity(2, ring), (1, 2), 2)


def test_nilpotent_exponential(ring, eta, params):
    rep = fundamental_rep(eta, params)
    eye = ParamMatrix.identity(2, ring)
    jplus = rep[G.JPLUS]
    assert nilpotent_exp(jplus.scale(2 * ring.h)) == eye + jplus.scale(2 * ring.h)
    assert nilpotent_exp(ParamMatrix.zeros(2, 2, ring)) == eye


def test_universal_exponent_is_nilpotent(lam, mu, params):
    first, second = fundamental_rep(lam, params), fundamental_rep(mu, params)
    m = -kron(first[G.JPLUS], cartan_image(second, params))
    assert (m * m).is_zero()


@pytest.mark.parametrize('seed', SEEDS)
def test_exponential_of_negated_matrix_is_inverse(seed, ring, random_poly):
    rng = random.Random(seed)
    rows = [[ring.zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            rows[i][j] = random_poly(rng, terms=2, degree=1)
    m = ParamMatrix.from_rows(rows, ring)
    assert (nilpotent_exp(m) * nilpotent_exp(-m)).is_identity()


def test_exponential_rejects_non_nilpotent(ring):
    with pytest.raises(MatrixException):
        nilpotent_exp(ParamMatrix.identity(2, ring))


def test_inverse_of_r_matrix(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    inverse = mat_inverse(r)
    assert (r * inverse).is_identity()
    assert (inverse * r).is_identity()
    assert mat_inverse(ParamMatrix.identity(4, ring)) == ParamMatrix.identity(4, ring)


@pytest.mark.parametrize('seed', SEEDS)
def test_inverse_is_two_sided(seed, ring, random_poly):
    rng = random.Random(seed)
    m = random_matrix(ring, rng, 2, random_poly)
    if not m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]:
        pytest.skip("singular sample")
    inverse = mat_inverse(m)
    assert (m * inverse).is_identity()
    assert (inverse * m).is_identity()


def test_inverse_needs_pivoting(ring):
    m = ParamMatrix.from_rows([[0, 1], [1, ring.h]], ring)
    assert (m * mat_inverse(m)).is_identity()


def test_singular_matrix_raises(ring):
    with pytest.raises(MatrixException):
        mat_inverse(ParamMatrix.from_rows([[ring.h, ring.s], [2 * ring.h, 2 * ring.s]], ring))


def test_dimension_mismatch_raises(ring):
    with pytest.raises(MatrixException):
        ParamMatrix.identity(2, ring) + ParamMatrix.identity(4, ring)
    with pytest.raises(MatrixException):
        ParamMatrix.identity(2, ring) * ParamMatrix.identity(4, ring)


def test_rings_must_agree(ring):
    with pytest.raises(MatrixException):
        ParamMatrix.identity(2, ring) + ParamMatrix.identity(2, scalar_ring())


def test_substitute_and_transpose(ring, lam, mu, params):
    r = coloured_R(lam, mu, params).matrix
    at_zero = r.substitute({'lambda': 0, 'mu': 0})
    h = ring.h
    assert at_zero == ParamMatrix.from_rows(
        [[1, h, -h, h ** 2], [0, 1, 0, h], [0, 0, 1, -h], [0, 0, 0, 1]], ring
    )
    assert r.transpose().transpose() == r
    assert r.substitute({}) is r
