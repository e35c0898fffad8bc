"""
Shared fixtures
"""

import random
from fractions import Fraction

import pytest

from jordanian.core.params import Deformation
from jordanian.core.scalars import scalar_ring


@pytest.fixture
def ring():
    """h, s and the four colour symbols"""
    return scalar_ring(['lambda', 'mu', 'nu', 'eta'])


@pytest.fixture
def params(ring):
    return Deformation.symbolic(ring)


@pytest.fixture
def lam(ring):
    return ring.gen('lambda')


@pytest.fixture
def mu(ring):
    return ring.gen('mu')


@pytest.fixture
def nu(ring):
    return ring.gen('nu')


@pytest.fixture
def eta(ring):
    return ring.gen('eta')


@pytest.fixture
def random_poly(ring):
    """Factory: random polynomial in h, s, lambda, mu with small rational coefficients"""
    names = ('h', 's', 'lambda', 'mu')

    def make(rng: random.Random, terms: int = 3, degree: int = 2):
        total = ring.zero
        for _ in range(rng.randint(1, terms)):
            term = ring(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
            for name in names:
                term = term * ring.gen(name) ** rng.randint(0, degree)
            total = total + term
        return total

    return make


@pytest.fixture
def log_dir(tmp_path):
    return tmp_path / 'logs'
