"""
Hopf Structure of U_{h,s}gl(2)
==============================

Formal coproduct, counit and antipode on generators, extended to words
(Δ and ε multiplicatively, γ anti-multiplicatively) and applied leg-wise to
tensor expressions. E stands for exp(2h J+): Δ(E) = E⊗E, ε(E) = 1,
γ(E) = Einv.
"""

from typing import Union
import logging

from sympy.polys.fields import FracElement

from ...core.exceptions import ValidationException
from ...core.params import Deformation
from ...core.report import VerificationReport
from .generators import GeneratorSymbol, GeneratorWord, TensorExpression, Word


logger = logging.getLogger('jordanian.representation.hopf')

G = GeneratorSymbol

HOPF_SUBALGEBRA = frozenset({G.ONE, G.J3, G.JPLUS, G.Z, G.E, G.EINV})


def coproduct(x: GeneratorSymbol, params: Deformation) -> TensorExpression:
    """
    Two-leg coproduct of a generator

    Args:
        x: Generator
        params: Values of h and s

    Returns:
        TensorExpression: Δ(x)
    """
    ring, h, s = params.ring, params.h, params.s
    t = TensorExpression.of
    x = GeneratorSymbol(x)

    if x is G.ONE:
        return TensorExpression.unit(ring, 2)
    if x in (G.JPLUS, G.Z):
        return t(ring, [], [x]) + t(ring, [x], [])
    if x in (G.E, G.EINV):
        return t(ring, [x], [x])
    if x is G.J3:
        # 1⊗J3 + J3⊗E + (s/h) Z⊗(E - 1)
        return (
            t(ring, [], [G.J3])
            + t(ring, [G.J3], [G.E])
            + t(ring, [G.Z], [G.E], coeff=s / h)
            - t(ring, [G.Z], [], coeff=s / h)
        )
    # Jminus: 1⊗J- + J-⊗E + s (J3 + (s/h) Z)⊗Z E
    return (
        t(ring, [], [G.JMINUS])
        + t(ring, [G.JMINUS], [G.E])
        + t(ring, [G.J3], [G.Z, G.E], coeff=s)
        + t(ring, [G.Z], [G.Z, G.E], coeff=s ** 2 / h)
    )


def coproduct_word(word: Union[Word, GeneratorWord], params: Deformation) -> TensorExpression:
    """Δ extended multiplicatively; the empty word maps to 1⊗1"""
    coefficient = params.ring.one
    if isinstance(word, GeneratorWord):
        word, coefficient = word.factors, word.coefficient
    result = TensorExpression.unit(params.ring, 2)
    for symbol in word:
        result = result * coproduct(symbol, params)
    return result.scale(coefficient)


def apply_coproduct(expr: TensorExpression, leg: int, params: Deformation) -> TensorExpression:
    """Apply Δ on one leg, splitting it in two"""
    return expr.map_leg(leg, lambda word: coproduct_word(word, params), 2)


def counit(x: GeneratorSymbol, params: Deformation) -> FracElement:
    """ε(x): 1 on One, E, Einv and 0 on J3, J+, J-, Z"""
    x = GeneratorSymbol(x)
    return params.ring.one if x in (G.ONE, G.E, G.EINV) else params.ring.zero


def counit_word(word: Union[Word, GeneratorWord], params: Deformation) -> FracElement:
    coefficient = params.ring.one
    if isinstance(word, GeneratorWord):
        word, coefficient = word.factors, word.coefficient
    for symbol in word:
        coefficient = coefficient * counit(symbol, params)
    return coefficient


def apply_counit(expr: TensorExpression, leg: int, params: Deformation) -> TensorExpression:
    """Apply ε on one leg, removing it"""
    if expr.legs < 2:
        raise ValidationException("Counit on a leg needs at least two legs", {'legs': expr.legs})
    if not 1 <= leg <= expr.legs:
        raise ValidationException("Leg out of range", {'leg': leg, 'legs': expr.legs})
    index = leg - 1
    result = TensorExpression(expr.legs - 1, expr.ring)
    for key, coeff in expr:
        result._accumulate(key[:index] + key[index + 1:], coeff * counit_word(key[index], params))
    return result


def antipode(x: GeneratorSymbol, params: Deformation) -> TensorExpression:
    """
    One-leg antipode of a generator

    γ(J3) = -J3 Einv + (s/h) Z (1 - Einv)
    γ(J-) = -J- Einv + s (J3 + (s/h) Z) Z Einv
    """
    ring, h, s = params.ring, params.h, params.s
    t = TensorExpression.of
    x = GeneratorSymbol(x)

    if x is G.ONE:
        return TensorExpression.unit(ring, 1)
    if x in (G.JPLUS, G.Z):
        return t(ring, [x], coeff=-1)
    if x is G.E:
        return t(ring, [G.EINV])
    if x is G.EINV:
        return t(ring, [G.E])
    if x is G.J3:
        return (
            t(ring, [G.J3, G.EINV], coeff=-1)
            + t(ring, [G.Z], coeff=s / h)
            - t(ring, [G.Z, G.EINV], coeff=s / h)
        )
    return (
        t(ring, [G.JMINUS, G.EINV], coeff=-1)
        + t(ring, [G.J3, G.Z, G.EINV], coeff=s)
        + t(ring, [G.Z, G.Z, G.EINV], coeff=s ** 2 / h)
    )


def antipode_word(word: Union[Word, GeneratorWord], params: Deformation) -> TensorExpression:
    """γ extended anti-multiplicatively: γ(xy) = γ(y)γ(x)"""
    coefficient = params.ring.one
    if isinstance(word, GeneratorWord):
        word, coefficient = word.factors, word.coefficient
    result = TensorExpression.unit(params.ring, 1)
    for symbol in reversed(word):
        result = result * antipode(symbol, params)
    return result.scale(coefficient)


def apply_antipode(expr: TensorExpression, leg: int, params: Deformation) -> TensorExpression:
    return expr.map_leg(leg, lambda word: antipode_word(word, params), 1)


def hopf_subalgebra_closure(params: Deformation) -> VerificationReport:
    """
    Syntactic check that J3, J+, Z, E generate a Hopf subalgebra

    Δ and γ of each of these generators may only involve One, J3, J+, Z, E
    and Einv; ε is scalar-valued and needs no check.
    """
    report = VerificationReport('hopf-subalgebra')
    for x in (G.J3, G.JPLUS, G.Z, G.E):
        for label, image in (('coproduct', coproduct(x, params)), ('antipode', antipode(x, params))):
            outside = sorted(s.value for s in image.symbols() - HOPF_SUBALGEBRA)
            report.add_fact(
                f"{label}({x.value}) closes in the J3, J+, Z, E subalgebra",
                not outside,
                {'outside': outside} if outside else None
            )
    return report
