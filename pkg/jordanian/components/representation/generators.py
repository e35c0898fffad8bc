"""
Generator Words and Tensor Expressions
======================================

Formal carriers for the Hopf structure of U_{h,s}gl(2) before it is put
into a representation.

- ``GeneratorSymbol``: One, J3, Jplus, Jminus, Z, E = exp(2h J+), Einv
- ``GeneratorWord``: ordered product of symbols with a coefficient
- ``TensorExpression``: linear combination of tensor products of words,
  all with the same number of legs. A one-leg expression is an ordinary
  element of the algebra.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Set, Tuple

from sympy.polys.fields import FracElement

from ...core.exceptions import ValidationException
from ...core.scalars import ScalarLike, ScalarRing


class GeneratorSymbol(str, Enum):
    ONE = 'One'
    J3 = 'J3'
    JPLUS = 'Jplus'
    JMINUS = 'Jminus'
    Z = 'Z'
    E = 'E'
    EINV = 'Einv'

    def __str__(self) -> str:
        return self.value


Word = Tuple[GeneratorSymbol, ...]

_INVERSE_PAIRS = {
    (GeneratorSymbol.E, GeneratorSymbol.EINV),
    (GeneratorSymbol.EINV, GeneratorSymbol.E),
}


def normalize_word(symbols: Iterable[GeneratorSymbol]) -> Word:
    """Drop units and cancel adjacent E·Einv pairs; the empty word is the unit"""
    stack: List[GeneratorSymbol] = []
    for symbol in symbols:
        symbol = GeneratorSymbol(symbol)
        if symbol is GeneratorSymbol.ONE:
            continue
        if stack and (stack[-1], symbol) in _INVERSE_PAIRS:
            stack.pop()
            continue
        stack.append(symbol)
    return tuple(stack)


def word_text(word: Word) -> str:
    return '*'.join(s.value for s in word) if word else '1'


@dataclass(frozen=True)
class GeneratorWord:
    """Coefficient times an ordered product of generators"""
    factors: Word
    coefficient: FracElement

    def __mul__(self, other: 'GeneratorWord') -> 'GeneratorWord':
        return GeneratorWord(normalize_word(self.factors + other.factors), self.coefficient * other.coefficient)

    def __str__(self) -> str:
        return f"({self.coefficient})*{word_text(self.factors)}"


class TensorExpression:
    """
    Formal sum of coefficient * (w_1 ⊗ ... ⊗ w_k)

    Terms with equal leg tuples are merged and zero coefficients dropped, so
    two expressions are equal exactly when their term maps are.
    """

    def __init__(self, legs: int, ring: ScalarRing, terms: Dict[Tuple[Word, ...], FracElement] = None):
        if legs < 1:
            raise ValidationException("A tensor expression needs at least one leg", {'legs': legs})
        self.legs = legs
        self.ring = ring
        self.terms: Dict[Tuple[Word, ...], FracElement] = {}
        for key, coeff in (terms or {}).items():
            self._accumulate(key, coeff)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, ring: ScalarRing, *legs: Iterable[GeneratorSymbol], coeff: ScalarLike = 1) -> 'TensorExpression':
        """Single term coeff * (legs[0] ⊗ legs[1] ⊗ ...)"""
        key = tuple(normalize_word(leg) for leg in legs)
        return cls(len(key), ring, {key: ring(coeff)})

    @classmethod
    def unit(cls, ring: ScalarRing, legs: int = 1) -> 'TensorExpression':
        return cls(legs, ring, {((),) * legs: ring.one})

    @classmethod
    def zero(cls, ring: ScalarRing, legs: int = 1) -> 'TensorExpression':
        return cls(legs, ring)

    def _accumulate(self, key: Tuple[Word, ...], coeff: FracElement) -> None:
        if len(key) != self.legs:
            raise ValidationException("Term has the wrong number of legs", {'expected': self.legs, 'got': len(key)})
        if not coeff:
            return
        total = self.terms.get(key, self.ring.zero) + coeff
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def _check(self, other: 'TensorExpression') -> None:
        if other.legs != self.legs:
            raise ValidationException("Leg counts differ", {'left': self.legs, 'right': other.legs})

    def __add__(self, other: 'TensorExpression') -> 'TensorExpression':
        self._check(other)
        result = TensorExpression(self.legs, self.ring, self.terms)
        for key, coeff in other.terms.items():
            result._accumulate(key, coeff)
        return result

    def __neg__(self) -> 'TensorExpression':
        return self.scale(-self.ring.one)

    def __sub__(self, other: 'TensorExpression') -> 'TensorExpression':
        return self + (-other)

    def scale(self, c: ScalarLike) -> 'TensorExpression':
        c = self.ring(c)
        return TensorExpression(self.legs, self.ring, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: 'TensorExpression') -> 'TensorExpression':
        """Leg-wise product (u1 ⊗ u2)(v1 ⊗ v2) = u1 v1 ⊗ u2 v2"""
        self._check(other)
        result = TensorExpression(self.legs, self.ring)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                key = tuple(normalize_word(u + v) for u, v in zip(left, right))
                result._accumulate(key, a * b)
        return result

    def tensor(self, other: 'TensorExpression') -> 'TensorExpression':
        """self ⊗ other, concatenating legs"""
        result = TensorExpression(self.legs + other.legs, self.ring)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._accumulate(left + right, a * b)
        return result

    def map_leg(
        self,
        leg: int,
        fn: Callable[[Word], 'TensorExpression'],
        image_legs: int
    ) -> 'TensorExpression':
        """
        Replace the word on ``leg`` (1-based) by ``fn(word)``

        ``fn`` returns an ``image_legs``-leg expression; the new legs are
        inserted in place of ``leg``.
        """
        if not 1 <= leg <= self.legs:
            raise ValidationException("Leg out of range", {'leg': leg, 'legs': self.legs})
        index = leg - 1
        result = TensorExpression(self.legs - 1 + image_legs, self.ring)
        for key, coeff in self.terms.items():
            image = fn(key[index])
            if image.legs != image_legs:
                raise ValidationException("Leg image has the wrong size", {'expected': image_legs, 'got': image.legs})
            for inner, c in image.terms.items():
                result._accumulate(key[:index] + inner + key[index + 1:], coeff * c)
        return result

    def contract(self) -> 'TensorExpression':
        """Multiply all legs together: u1 ⊗ ... ⊗ uk -> u1 ... uk"""
        result = TensorExpression(1, self.ring)
        for key, coeff in self.terms.items():
            result._accumulate((normalize_word(w for word in key for w in word),), coeff)
        return result

    def symbols(self) -> Set[GeneratorSymbol]:
        """Generators appearing in any term"""
        return {symbol for key in self.terms for word in key for symbol in word}

    def __iter__(self) -> Iterator[Tuple[Tuple[Word, ...], FracElement]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorExpression) and self.legs == other.legs and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for key, coeff in sorted(self.terms.items(), key=lambda kv: tuple(word_text(w) for w in kv[0])):
            legs = ' ⊗ '.join(word_text(w) for w in key)
            parts.append(f"({self.ring.format(coeff)}) {legs}")
        return ' + '.join(parts)

    def __repr__(self) -> str:
        return f"TensorExpression(legs={self.legs}, terms={len(self.terms)})"
