"""
Noncommutative Polynomials
==========================

Free algebra over a scalar ring in the coloured generators a_λ, b_λ, c_λ,
d_λ. A word is a tuple of :class:`NCGenerator`; a polynomial is a finite map
from words to nonzero coefficients.

:class:`PairPoly` is the tensor square used for coalgebra checks: two
commuting copies of the algebra, stored as (word, primed word) pairs.
"""

from dataclasses import dataclass
from typing import Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.fields import FracElement

from ...core.exceptions import ValidationException
from ...core.scalars import ScalarLike, ScalarRing
from ...core.types import ScalarStyle


LETTERS = ('a', 'b', 'c', 'd')

# T = [[a, b], [c, d]]
MATRIX_LETTERS = (('a', 'b'), ('c', 'd'))


@dataclass(frozen=True)
class NCGenerator:
    """Letter of T carrying a colour"""
    letter: str
    colour: FracElement

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise ValidationException(f"Unknown generator letter '{self.letter}'", {'letters': list(LETTERS)})

    def text(self, ring: ScalarRing, style: ScalarStyle = 'plain') -> str:
        colour = ring.format(self.colour, style)
        if style == 'latex':
            return f"{self.letter}_{{{colour}}}"
        if not colour.replace('_', '').isalnum():
            colour = f"({colour})"
        return f"{self.letter}_{colour}"


NCWord = Tuple[NCGenerator, ...]


def word_text(word: NCWord, ring: ScalarRing, style: ScalarStyle = 'plain') -> str:
    if not word:
        return '1'
    separator = ' ' if style == 'latex' else '*'
    return separator.join(g.text(ring, style) for g in word)


def multidegree(word: NCWord) -> Dict[FracElement, int]:
    """Letter count per colour"""
    counts: Dict[FracElement, int] = {}
    for g in word:
        counts[g.colour] = counts.get(g.colour, 0) + 1
    return counts


class _LinearCombination:
    """Shared sparse-vector arithmetic over a scalar ring"""

    def __init__(self, ring: ScalarRing, terms: Optional[Mapping[Hashable, FracElement]] = None):
        self.ring = ring
        self.terms: Dict[Hashable, FracElement] = {}
        for key, coeff in (terms or {}).items():
            self._accumulate(key, coeff)

    def _new(self, terms: Optional[Mapping] = None):
        return self.__class__(self.ring, terms)

    def _accumulate(self, key: Hashable, coeff: FracElement) -> None:
        if not coeff:
            return
        total = self.terms.get(key, self.ring.zero) + coeff
        if total:
            self.terms[key] = total
        else:
            self.terms.pop(key, None)

    def __add__(self, other):
        result = self._new(self.terms)
        for key, coeff in other.terms.items():
            result._accumulate(key, coeff)
        return result

    def __sub__(self, other):
        result = self._new(self.terms)
        for key, coeff in other.terms.items():
            result._accumulate(key, -coeff)
        return result

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def scale(self, c: ScalarLike):
        c = self.ring(c)
        if not c:
            return self._new()
        return self._new({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c: ScalarLike):
        return self.scale(c)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, self.__class__) and self.terms == other.terms

    __hash__ = None

    def __iter__(self) -> Iterator[Tuple[Hashable, FracElement]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def substitute(self, bindings: Mapping[str, ScalarLike], target: Optional[ScalarRing] = None):
        """Substitute symbols in the coefficients only"""
        target = target or self.ring
        result = self.__class__(target)
        for key, coeff in self.terms.items():
            result._accumulate(key, self.ring.substitute(coeff, bindings, target))
        return result


class NCPoly(_LinearCombination):
    """Noncommutative polynomial in coloured generators"""

    @classmethod
    def gen(cls, ring: ScalarRing, letter: str, colour: ScalarLike) -> 'NCPoly':
        return cls(ring, {(NCGenerator(letter, ring(colour)),): ring.one})

    @classmethod
    def word(cls, ring: ScalarRing, word: NCWord, coeff: ScalarLike = 1) -> 'NCPoly':
        return cls(ring, {tuple(word): ring(coeff)})

    @classmethod
    def constant(cls, ring: ScalarRing, c: ScalarLike) -> 'NCPoly':
        return cls(ring, {(): ring(c)})

    def __mul__(self, other: Union['NCPoly', FracElement, int]) -> 'NCPoly':
        if not isinstance(other, NCPoly):
            return self.scale(other)
        result = NCPoly(self.ring)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._accumulate(left + right, a * b)
        return result

    def words(self) -> List[NCWord]:
        return list(self.terms)

    def degrees(self) -> set:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        """All words share one length and one colour multidegree"""
        keys = {tuple(sorted(((str(c), n) for c, n in multidegree(w).items()))) for w in self.terms}
        return len(keys) <= 1

    def colours(self) -> set:
        return {g.colour for w in self.terms for g in w}

    def counit(self) -> FracElement:
        """ε(a) = ε(d) = 1, ε(b) = ε(c) = 0, extended multiplicatively"""
        total = self.ring.zero
        for word, coeff in self.terms.items():
            if all(g.letter in ('a', 'd') for g in word):
                total = total + coeff
        return total

    def format(self, style: ScalarStyle = 'plain') -> str:
        """Terms ordered by word; coefficients other than ±1 are parenthesized"""
        if not self.terms:
            return '0'
        ring = self.ring
        parts = []
        for word in sorted(self.terms, key=lambda w: _word_sort_key(w, ring)):
            coeff = self.terms[word]
            negative = coeff == -ring.one
            text = word_text(word, ring, style)
            if coeff == ring.one or negative:
                body = text
            else:
                body = f"({ring.format(coeff, style)})" + (' ' if style == 'latex' else '*') + text
            if not parts:
                parts.append(('-' if negative else '') + body)
            else:
                parts.append((' - ' if negative else ' + ') + body)
        return ''.join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"NCPoly({self.format()})"


def _word_sort_key(word: NCWord, ring: ScalarRing) -> tuple:
    return (len(word), tuple((LETTERS.index(g.letter), ring.format(g.colour)) for g in word))


def commutator(x: NCPoly, y: NCPoly) -> NCPoly:
    """xy - yx"""
    return x * y - y * x


def t_matrix(ring: ScalarRing, colour: ScalarLike) -> List[List[NCPoly]]:
    """T_colour = [[a, b], [c, d]]"""
    return [[NCPoly.gen(ring, letter, colour) for letter in row] for row in MATRIX_LETTERS]


def matmul(x: Sequence[Sequence[NCPoly]], y: Sequence[Sequence[NCPoly]]) -> List[List[NCPoly]]:
    """Product of square matrices with NCPoly entries (order of factors kept)"""
    n = len(x)
    ring = x[0][0].ring
    result = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = NCPoly(ring)
            for k in range(n):
                acc = acc + x[i][k] * y[k][j]
            row.append(acc)
        result.append(row)
    return result


# ----------------------------------------------------------------------------
# Tensor square
# ----------------------------------------------------------------------------

PairWord = Tuple[NCWord, NCWord]


class PairPoly(_LinearCombination):
    """
    Element of A ⊗ A': sums of coeff * (u ⊗ u')

    The copies commute, so (u ⊗ u')(w ⊗ w') = uw ⊗ u'w'.
    """

    @classmethod
    def left(cls, poly: NCPoly) -> 'PairPoly':
        """poly ⊗ 1"""
        return cls(poly.ring, {(w, ()): c for w, c in poly})

    @classmethod
    def right(cls, poly: NCPoly) -> 'PairPoly':
        """1 ⊗ poly"""
        return cls(poly.ring, {((), w): c for w, c in poly})

    @classmethod
    def tensor(cls, x: NCPoly, y: NCPoly) -> 'PairPoly':
        result = cls(x.ring)
        for u, a in x:
            for v, b in y:
                result._accumulate((u, v), a * b)
        return result

    def __mul__(self, other: Union['PairPoly', FracElement, int]) -> 'PairPoly':
        if not isinstance(other, PairPoly):
            return self.scale(other)
        result = PairPoly(self.ring)
        for (u, u2), a in self.terms.items():
            for (w, w2), b in other.terms.items():
                result._accumulate((u + w, u2 + w2), a * b)
        return result

    def format(self, style: ScalarStyle = 'plain') -> str:
        if not self.terms:
            return '0'
        ring = self.ring
        parts = []
        for key in sorted(self.terms, key=lambda k: (_word_sort_key(k[0], ring), _word_sort_key(k[1], ring))):
            coeff = self.terms[key]
            text = f"{word_text(key[0], ring, style)} (x) {word_text(key[1], ring, style)}'"
            parts.append(f"({ring.format(coeff, style)})*{text}")
        return ' + '.join(parts)

    def __str__(self) -> str:
        return self.format()


def coproduct(poly: NCPoly) -> PairPoly:
    """Δ(x_ij) = Σ_k x_ik ⊗ x'_kj extended multiplicatively; Δ(1) = 1 ⊗ 1"""
    ring = poly.ring
    result = PairPoly(ring)
    for word, coeff in poly:
        image = PairPoly(ring, {((), ()): coeff})
        for g in word:
            image = image * _generator_coproduct(ring, g)
        result = result + image
    return result


def _generator_coproduct(ring: ScalarRing, g: NCGenerator) -> PairPoly:
    for i, row in enumerate(MATRIX_LETTERS):
        if g.letter in row:
            j = row.index(g.letter)
            break
    terms = {}
    for k in range(2):
        left = NCGenerator(MATRIX_LETTERS[i][k], g.colour)
        right = NCGenerator(MATRIX_LETTERS[k][j], g.colour)
        terms[((left,), (right,))] = ring.one
    return PairPoly(ring, terms)

