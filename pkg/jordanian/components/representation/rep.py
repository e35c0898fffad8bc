"""
Two-Dimensional Representations
===============================

The fundamental representation π_η of U_{h,s}gl(2) (η is the eigenvalue of
the central generator Z), the undeformed gl(2) representation used for
first-order checks, evaluation of tensor expressions, and the universal
R-matrix in π_λ ⊗ π_μ.
"""

from typing import Callable, Dict, Optional, Sequence
import logging

from sympy.polys.fields import FracElement

from ...core.exceptions import ValidationException
from ...core.matrix import ParamMatrix, kron, kron_all, nilpotent_exp
from ...core.params import Deformation, resolve
from ...core.scalars import ScalarLike
from .generators import GeneratorSymbol, TensorExpression, Word


logger = logging.getLogger('jordanian.representation')

G = GeneratorSymbol

Representation = Dict[GeneratorSymbol, ParamMatrix]
RepFactory = Callable[[FracElement, Deformation], Representation]


def _m(ring, rows) -> ParamMatrix:
    return ParamMatrix.from_rows(rows, ring)


def fundamental_rep(eta: ScalarLike, params: Optional[Deformation] = None) -> Representation:
    """
    π_η on all generators

    Args:
        eta: Colour (eigenvalue of Z)
        params: Values of h and s (symbolic by default)

    Returns:
        Dict: GeneratorSymbol -> 2×2 matrix
    """
    params, (eta,) = resolve(eta, params=params)
    ring = params.ring
    two_h = 2 * params.h
    return {
        G.ONE: ParamMatrix.identity(2, ring),
        G.J3: _m(ring, [[1, 0], [0, -1]]),
        G.JPLUS: _m(ring, [[0, 1], [0, 0]]),
        G.JMINUS: _m(ring, [[params.plus(eta) ** 2 / two_h, 0], [1, params.minus(eta) ** 2 / two_h]]),
        G.Z: _m(ring, [[eta, 0], [0, eta]]),
        G.E: _m(ring, [[1, two_h], [0, 1]]),
        G.EINV: _m(ring, [[1, -two_h], [0, 1]]),
    }


def classical_rep(eta: ScalarLike, params: Optional[Deformation] = None) -> Representation:
    """
    Undeformed gl(2) representation: J- maps to e21

    π_η(J-) has no limit as h -> 0, so first-order (Lie bialgebra) checks
    use this representation. E and Einv are not part of it.
    """
    params, (eta,) = resolve(eta, params=params)
    ring = params.ring
    return {
        G.ONE: ParamMatrix.identity(2, ring),
        G.J3: _m(ring, [[1, 0], [0, -1]]),
        G.JPLUS: _m(ring, [[0, 1], [0, 0]]),
        G.JMINUS: _m(ring, [[0, 0], [1, 0]]),
        G.Z: _m(ring, [[eta, 0], [0, eta]]),
    }


def evaluate_word(word: Word, rep: Representation) -> ParamMatrix:
    """Product of the images of the letters of ``word``"""
    result = rep[G.ONE]
    for symbol in word:
        if symbol not in rep:
            raise ValidationException(f"Generator {symbol.value} has no image in this representation")
        result = result * rep[symbol]
    return result


def evaluate_tensor(
    expr: TensorExpression,
    colours: Sequence[ScalarLike],
    params: Optional[Deformation] = None,
    rep_factory: RepFactory = fundamental_rep
) -> ParamMatrix:
    """
    Evaluate a tensor expression in π_{c1} ⊗ ... ⊗ π_{ck}

    Args:
        expr: k-leg expression
        colours: One colour per leg
        params: Values of h and s
        rep_factory: Representation constructor (fundamental by default)

    Returns:
        ParamMatrix: 2^k × 2^k matrix
    """
    if len(colours) != expr.legs:
        raise ValidationException(
            "Leg count does not match colour count",
            {'legs': expr.legs, 'colours': len(colours)}
        )
    params, colours = resolve(*colours, params=params)
    ring = params.ring
    reps = [rep_factory(c, params) for c in colours]

    cache: Dict[tuple, ParamMatrix] = {}
    total = ParamMatrix.zeros(2 ** expr.legs, 2 ** expr.legs, ring)
    for key, coeff in expr:
        factors = []
        for leg, word in enumerate(key):
            if (leg, word) not in cache:
                cache[(leg, word)] = evaluate_word(word, reps[leg])
            factors.append(cache[(leg, word)])
        total = total + kron_all(factors).scale(ring(coeff))
    return total


def cartan_image(rep: Representation, params: Deformation) -> ParamMatrix:
    """h·π(J3) + s·π(Z)"""
    return rep[G.J3].scale(params.h) + rep[G.Z].scale(params.s)


def universal_R_rep(
    lam: ScalarLike,
    mu: ScalarLike,
    params: Optional[Deformation] = None,
    bound: Optional[int] = None
) -> ParamMatrix:
    """
    Universal R-matrix in π_λ ⊗ π_μ

    exp(-π_λ(J+) ⊗ (h π_μ(J3) + s π_μ(Z))) · exp((h π_λ(J3) + s π_λ(Z)) ⊗ π_μ(J+))

    Returns:
        ParamMatrix: 4×4 matrix, equal to the coloured R-matrix
    """
    params, (lam, mu) = resolve(lam, mu, params=params)
    first, second = fundamental_rep(lam, params), fundamental_rep(mu, params)
    left = nilpotent_exp(-kron(first[G.JPLUS], cartan_image(second, params)), bound)
    right = nilpotent_exp(kron(cartan_image(first, params), second[G.JPLUS]), bound)
    return left * right
