"""
Scalar field: canonical arithmetic, substitution, parsing and printing
"""

import random
from fractions import Fraction

import pytest

from jordanian.core.exceptions import ExpressionException, ScalarException
from jordanian.core.scalars import (
    ScalarRing,
    f_scalar,
    format_scalar,
    is_constant,
    is_polynomial,
    parameter_order,
    parse_scalar,
    scalar_arith,
    scalar_ring,
    substitute,
    symbols_in,
)


SEEDS = range(100)


def test_difference_of_squares(ring, lam):
    h, s = ring.h, ring.s
    assert (h + lam * s) * (h - lam * s) == h ** 2 - lam ** 2 * s ** 2


def test_f_is_expanded_canonically(ring, lam, mu):
    expected = ring.parse("h^2 - lambda*mu*s^2 - h*s*(lambda - mu)")
    assert f_scalar(lam, mu) == expected
    assert f_scalar(lam, mu, ring.h, ring.h) == ring.parse("h^2 - lambda*mu*h^2 - h^2*(lambda - mu)")


def test_quotient_cancels(ring, eta):
    h, s = ring.h, ring.s
    value = (h + eta * s) ** 2 / (2 * h)
    assert value * (2 * h) == (h + eta * s) ** 2
    assert not is_polynomial(value)
    assert is_polynomial(value * 2 * h)


def test_substitution_examples(ring, lam, mu, eta):
    h, s = ring.h, ring.s
    assert substitute(h + lam * s, {'lambda': 0}) == h
    assert substitute(f_scalar(lam, mu), {'lambda': eta, 'mu': eta}) == h ** 2 - eta ** 2 * s ** 2
    assert substitute((h - eta * s) ** 2 / (2 * h), {'eta': 0}) == h / 2


def test_substitution_is_simultaneous(ring):
    h, s = ring.h, ring.s
    assert substitute(h - s, {'h': s, 's': h}) == s - h


def test_substitution_into_smaller_ring(ring, lam, mu):
    target = scalar_ring(['mu'])
    moved = ring.substitute(lam * mu + ring.h, {'lambda': 3}, target)
    assert moved == 3 * target.gen('mu') + target.h
    with pytest.raises(ScalarException):
        ring.substitute(lam * mu, {'lambda': 3}, scalar_ring())


def test_vanishing_denominator_raises(ring):
    h, s = ring.h, ring.s
    with pytest.raises(ScalarException):
        substitute(ring.one / (h - s), {'s': h})


def test_division_by_zero_raises(ring):
    with pytest.raises(ScalarException):
        scalar_arith(ring.h, ring.zero, 'div')
    with pytest.raises(ScalarException):
        ring.parse("1/(h - h)")


def test_parse_zero(ring):
    assert not ring.parse("0")
    assert ring.parse("h - h") == ring.zero


def test_parse_negative_powers(ring):
    assert ring.parse("h^(-1)") == ring.one / ring.h
    assert ring.parse("(h + s)^(-2) * (h + s)^2") == ring.one
    assert ring.parse("2^3") == ring(8)


def test_parse_with_short_colour_names():
    ring = scalar_ring(['l', 'm'])
    l, m = ring.gen('l'), ring.gen('m')
    assert ring.parse("h^2 - l*m*s^2 - h*s*(l-m)") == f_scalar(l, m)
    assert parse_scalar("l + m", colours=['l', 'm']) == l + m


def test_parse_errors_carry_position(ring):
    with pytest.raises(ExpressionException) as info:
        ring.parse("h +")
    assert info.value.position is not None

    with pytest.raises(ExpressionException) as info:
        ring.parse("h + x")
    assert info.value.details['symbol'] == 'x'
    assert info.value.position == 4


def test_non_integer_exponent_rejected(ring):
    with pytest.raises(ExpressionException):
        ring.parse("h^s")
    with pytest.raises(ExpressionException):
        ring.parse("h^(1/2)")


def test_conversion_rejects_booleans(ring):
    with pytest.raises(ScalarException):
        ring(True)


def test_ring_validates_colours():
    with pytest.raises(ScalarException):
        ScalarRing(['h'])
    with pytest.raises(ScalarException):
        ScalarRing(['2x'])


def test_rings_are_shared():
    assert scalar_ring(['mu', 'lambda']) is scalar_ring(['lambda', 'mu', 'mu'])
    assert scalar_ring(['lambda']).symbols == ('h', 's', 'lambda')


def test_format_examples(ring, lam):
    h, s = ring.h, ring.s
    assert ring.format(h + lam * s, 'latex') == "h+\\lambda s"
    assert ring.format(h + lam * s) == "h + lambda*s"
    assert ring.format(-h) == "-h"
    assert ring.format(h / 2) == "h/2"
    assert ring.format(ring.zero) == "0"
    assert format_scalar(h ** 2) == "h^2"


def test_format_primed_colour_in_latex():
    ring = scalar_ring(['z', 'zprime'])
    assert ring.format(ring.gen('zprime'), 'latex') == "z'"


def test_parameter_order(ring, lam):
    h, s = ring.h, ring.s
    assert parameter_order(h + lam * s) == 1
    assert parameter_order(lam + h ** 2) == 0
    assert parameter_order(ring.zero) is None
    assert is_constant(ring(Fraction(3, 7)))


def test_symbols_in():
    assert symbols_in("h + lambda*s - lambda") == ['h', 'lambda', 's']


@pytest.mark.parametrize('seed', SEEDS)
def test_field_axioms(seed, ring, random_poly):
    rng = random.Random(seed)
    a, b, c = random_poly(rng), random_poly(rng), random_poly(rng)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == ring.zero
    if b:
        assert (a / b) * b == a


@pytest.mark.parametrize('seed', SEEDS)
def test_substitution_is_a_homomorphism(seed, ring, random_poly):
    rng = random.Random(seed)
    a, b = random_poly(rng), random_poly(rng)
    bindings = {
        'lambda': Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
        'mu': ring.h + rng.randint(1, 3) * ring.s,
    }
    assert substitute(a * b, bindings) == substitute(a, bindings) * substitute(b, bindings)
    assert substitute(a + b, bindings) == substitute(a, bindings) + substitute(b, bindings)


@pytest.mark.parametrize('seed', SEEDS)
def test_format_parse_round_trip(seed, ring, random_poly):
    rng = random.Random(seed)
    a, b = random_poly(rng), random_poly(rng)
    value = a / b if b else a
    assert ring.parse(ring.format(value)) == value
