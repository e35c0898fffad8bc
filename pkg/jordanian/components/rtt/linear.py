"""
Sector Linear Algebra
=====================

Exact linear algebra over the scalar field on one homogeneous word sector:
incremental echelon forms, span comparison with a numeric rank guard and
two-sided ideal membership with certificates.

A sector is the set of words with a fixed length and a fixed number of
letters of each colour; the RTT relations are homogeneous, so every question
asked here splits into independent finite-dimensional problems.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Any, Callable, Dict, Hashable, Iterator, List, Mapping, Optional, Sequence, Tuple
import itertools
import logging
import random

from sympy.polys.fields import FracElement

from ...core.config import VerificationSettings
from ...core.exceptions import ScalarException, SectorLimitException, ValidationException
from ...core.scalars import ScalarRing, constant_value, degree_measure
from ...core.types import Certificate, CertificateTerm, MembershipResult, SpanResult
from ...utils.logging import timed
from .ncpoly import LETTERS, NCGenerator, NCPoly, NCWord, PairPoly, multidegree, word_text


logger = logging.getLogger('jordanian.rtt.linear')

Vector = Dict[Hashable, FracElement]

GUARD_NUMERATOR = 97
GUARD_RETRIES = 10


def _axpy(target: Vector, c: FracElement, source: Mapping[Hashable, FracElement]) -> None:
    """target += c * source"""
    for key, value in source.items():
        total = target[key] + c * value if key in target else c * value
        if total:
            target[key] = total
        else:
            target.pop(key, None)


# ----------------------------------------------------------------------------
# Sectors
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Sector:
    """Words of fixed length with ``counts[i]`` letters of colour ``colours[i]``"""
    colours: Tuple[FracElement, ...]
    counts: Tuple[int, ...]

    @classmethod
    def of_word(cls, word: NCWord, colour_order: Sequence[FracElement] = ()) -> 'Sector':
        counts = multidegree(word)
        ranked = sorted(counts, key=lambda c: _colour_rank(c, colour_order))
        return cls(tuple(ranked), tuple(counts[c] for c in ranked))

    @property
    def degree(self) -> int:
        return sum(self.counts)

    @property
    def dimension(self) -> int:
        arrangements = factorial(self.degree)
        for n in self.counts:
            arrangements //= factorial(n)
        return arrangements * len(LETTERS) ** self.degree

    def counts_map(self) -> Dict[FracElement, int]:
        return {c: n for c, n in zip(self.colours, self.counts) if n}

    def contains(self, word: NCWord) -> bool:
        return len(word) == self.degree and multidegree(word) == self.counts_map()

    @cached_property
    def _colour_index(self) -> Dict[FracElement, int]:
        return {c: i for i, c in enumerate(self.colours)}

    def word_key(self, word: NCWord) -> tuple:
        """Lexicographic by (letter, colour) with a<b<c<d and colours in sector order"""
        rank = self._colour_index
        return tuple((LETTERS.index(g.letter), rank.get(g.colour, len(rank))) for g in word)

    def basis(self) -> Iterator[NCWord]:
        """All words of the sector in word_key order"""
        yield from _words(self.colours, list(self.counts))

    def require(self, limit: int) -> None:
        if self.dimension > limit:
            raise SectorLimitException(
                f"Sector of dimension {self.dimension} exceeds the limit {limit}",
                {'required_dim': self.dimension, 'limit': limit}
            )

    def describe(self, ring: ScalarRing) -> str:
        return ' + '.join(f"{n}*{ring.format(c)}" for c, n in zip(self.colours, self.counts) if n) or '0'


def _colour_rank(colour: FracElement, colour_order: Sequence[FracElement]) -> tuple:
    order = list(colour_order)
    if colour in order:
        return (0, order.index(colour), '')
    return (1, 0, str(colour))


def _words(colours: Sequence[FracElement], remaining: List[int]) -> Iterator[NCWord]:
    if not any(remaining):
        yield ()
        return
    for letter in LETTERS:
        for i, colour in enumerate(colours):
            if not remaining[i]:
                continue
            remaining[i] -= 1
            head = NCGenerator(letter, colour)
            for tail in _words(colours, remaining):
                yield (head,) + tail
            remaining[i] += 1


def sector_basis(sector: Sector, limit: Optional[int] = None) -> List[NCWord]:
    """Ordered word basis of a sector, refusing sectors above ``limit``"""
    if limit is not None:
        sector.require(limit)
    return list(sector.basis())


@dataclass(frozen=True)
class PairSector:
    """Sector of A ⊗ A': a sector for each tensor factor"""
    left: Sector
    right: Sector

    @classmethod
    def of_key(cls, key: Tuple[NCWord, NCWord], colour_order: Sequence[FracElement] = ()) -> 'PairSector':
        return cls(Sector.of_word(key[0], colour_order), Sector.of_word(key[1], colour_order))

    @property
    def dimension(self) -> int:
        return self.left.dimension * self.right.dimension

    def contains(self, key: Tuple[NCWord, NCWord]) -> bool:
        return self.left.contains(key[0]) and self.right.contains(key[1])

    def word_key(self, key: Tuple[NCWord, NCWord]) -> tuple:
        return (self.left.word_key(key[0]), self.right.word_key(key[1]))

    def require(self, limit: int) -> None:
        if self.dimension > limit:
            raise SectorLimitException(
                f"Sector of dimension {self.dimension} exceeds the limit {limit}",
                {'required_dim': self.dimension, 'limit': limit}
            )


# ----------------------------------------------------------------------------
# Echelon form
# ----------------------------------------------------------------------------

class EchelonSpan:
    """
    Incrementally maintained echelon basis of a span of sparse vectors

    Each stored row is normalized to 1 at its pivot and has zeros at the
    pivots of all earlier rows, so a single pass in insertion order reduces
    any vector. The pivot of a new row is the entry with the lowest
    numerator-plus-denominator degree, ties broken by ``order_key``.

    With ``track=True`` every row also records its expansion in the added
    inputs, which yields membership certificates.
    """

    def __init__(self, ring: ScalarRing, order_key: Optional[Callable[[Hashable], tuple]] = None, track: bool = False):
        self.ring = ring
        self.order_key = order_key
        self.track = track
        self._rows: List[Tuple[Hashable, Vector, Vector]] = []
        self._count = 0
        self.sources: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Mapping[Hashable, FracElement]) -> Tuple[Vector, Vector]:
        """
        Remainder of ``vector`` modulo the span

        Returns:
            (remainder, combination): vector - remainder equals the sum of
            combination[i] times input i (empty unless tracking)
        """
        remainder: Vector = {k: v for k, v in vector.items() if v}
        combination: Vector = {}
        for pivot, row, expansion in self._rows:
            c = remainder.get(pivot)
            if not c:
                continue
            _axpy(remainder, -c, row)
            if self.track:
                _axpy(combination, c, expansion)
        return remainder, combination

    def add(self, vector: Mapping[Hashable, FracElement]) -> bool:
        """Add an input vector; True when it enlarged the span"""
        index = self._count
        self._count += 1
        remainder, combination = self.reduce(vector)
        if not remainder:
            return False

        positions = {key: n for n, key in enumerate(remainder)}

        def pivot_rank(key):
            secondary = self.order_key(key) if self.order_key else positions[key]
            return (degree_measure(remainder[key]), secondary)

        pivot = min(remainder, key=pivot_rank)
        inverse = self.ring.one / remainder[pivot]
        row = {k: v * inverse for k, v in remainder.items()}
        expansion: Vector = {}
        if self.track:
            expansion = {index: inverse}
            _axpy(expansion, -inverse, combination)
        self._rows.append((pivot, row, expansion))
        self.sources.append(index)
        return True

    def extend(self, vectors) -> int:
        for vector in vectors:
            self.add(vector)
        return self.rank

    def contains(self, vector: Mapping[Hashable, FracElement]) -> bool:
        remainder, _ = self.reduce(vector)
        return not remainder


def rank_of(ring: ScalarRing, vectors, order_key=None) -> int:
    return EchelonSpan(ring, order_key).extend(vectors)


# ----------------------------------------------------------------------------
# Span comparison
# ----------------------------------------------------------------------------

def _classify(rank_left: int, rank_right: int, rank_union: int) -> str:
    if rank_left == rank_right == rank_union:
        return 'equal'
    if rank_union == rank_right:
        return 'left_subset'
    if rank_union == rank_left:
        return 'right_subset'
    return 'incomparable'


def _span_ranks(ring: ScalarRing, left: Sequence[Vector], right: Sequence[Vector], order_key) -> Tuple[int, int, int]:
    left_span = EchelonSpan(ring, order_key)
    rank_left = left_span.extend(left)
    rank_right = rank_of(ring, right, order_key)
    rank_union = left_span.extend(right)
    return rank_left, rank_right, rank_union


def random_point(ring: ScalarRing, rng: random.Random) -> Dict[str, Fraction]:
    """Random nonzero rational value for every symbol of the ring"""
    point = {}
    for name in ring.symbols:
        numerator = 0
        while not numerator:
            numerator = rng.randint(-GUARD_NUMERATOR, GUARD_NUMERATOR)
        point[name] = Fraction(numerator, rng.randint(1, GUARD_NUMERATOR))
    return point


def _at_point(ring: ScalarRing, vectors: Sequence[Vector], point: Mapping[str, Fraction]) -> List[Vector]:
    evaluated = []
    for vector in vectors:
        values = {}
        for key, coeff in vector.items():
            value = ring.substitute(coeff, point)
            if value:
                values[key] = value
        evaluated.append(values)
    return evaluated


def span_compare(
    left: Sequence[NCPoly],
    right: Sequence[NCPoly],
    sector: Optional[Sector] = None,
    settings: Optional[VerificationSettings] = None,
    colour_order: Sequence[FracElement] = ()
) -> SpanResult:
    """
    Compare the spans of two relation sets inside one sector

    Args:
        left: First set of homogeneous polynomials
        right: Second set
        sector: Common sector (inferred from the first nonzero element)
        settings: Sector limit and rank guard settings
        colour_order: Colour precedence for the word order

    Returns:
        SpanResult: Relation, the three exact ranks and the rank guard outcome

    Raises:
        ValidationException: If an element lies outside the sector
        SectorLimitException: If the sector exceeds ``max_sector_dim``
    """
    settings = settings or VerificationSettings()
    polys = [p for p in list(left) + list(right) if p]
    if sector is None:
        if not polys:
            return {'relation': 'equal', 'rank_left': 0, 'rank_right': 0, 'rank_union': 0, 'sector_dim': 0}
        sector = Sector.of_word(next(iter(polys[0].terms)), colour_order)
    for p in polys:
        outside = [w for w in p.terms if not sector.contains(w)]
        if outside:
            raise ValidationException(
                "Polynomial has words outside the sector",
                {'word': word_text(outside[0], p.ring)}
            )
    sector.require(settings.max_sector_dim)

    if not polys:
        return {'relation': 'equal', 'rank_left': 0, 'rank_right': 0, 'rank_union': 0, 'sector_dim': sector.dimension}
    ring = polys[0].ring

    left_vectors = [dict(p.terms) for p in left]
    right_vectors = [dict(p.terms) for p in right]
    ranks = _span_ranks(ring, left_vectors, right_vectors, sector.word_key)
    result: SpanResult = {
        'relation': _classify(*ranks),
        'rank_left': ranks[0],
        'rank_right': ranks[1],
        'rank_union': ranks[2],
        'sector_dim': sector.dimension,
    }
    logger.debug(f"Span comparison in sector {sector.describe(ring)}: ranks {ranks} -> {result['relation']}")

    if settings.rank_guard_points and sector.dimension <= settings.guard_max_dim:
        guard = _rank_guard(ring, left_vectors, right_vectors, sector, settings)
        result['guard_ranks'] = guard
        result['guard_consistent'] = all(
            (g['rank_left'], g['rank_right'], g['rank_union']) == ranks for g in guard if not g.get('skipped')
        )
        if not result['guard_consistent']:
            logger.warning(f"Rank guard disagrees with exact ranks {ranks}: {guard}")
    elif settings.rank_guard_points:
        logger.warning(
            f"Rank guard skipped: sector dimension {sector.dimension} above {settings.guard_max_dim}"
        )
    return result


def _rank_guard(
    ring: ScalarRing,
    left: Sequence[Vector],
    right: Sequence[Vector],
    sector: Sector,
    settings: VerificationSettings
) -> List[Dict[str, Any]]:
    rng = random.Random(settings.guard_seed)
    guard: List[Dict[str, Any]] = []
    for _ in range(settings.rank_guard_points):
        for _attempt in range(GUARD_RETRIES):
            point = random_point(ring, rng)
            try:
                ranks = _span_ranks(ring, _at_point(ring, left, point), _at_point(ring, right, point), sector.word_key)
            except ScalarException:
                continue
            guard.append({'rank_left': ranks[0], 'rank_right': ranks[1], 'rank_union': ranks[2]})
            break
        else:
            logger.warning(f"Rank guard point skipped: {GUARD_RETRIES} random points hit a pole")
            guard.append({'skipped': True})
    return guard


# ----------------------------------------------------------------------------
# Ideal membership
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Sandwich:
    """left · relations[relation] · right"""
    left: NCWord
    relation: int
    right: NCWord


def _split_counts(counts: Sequence[int], size: int) -> Iterator[Tuple[int, ...]]:
    ranges = [range(n + 1) for n in counts]
    for choice in itertools.product(*ranges):
        if sum(choice) == size:
            yield choice


def sandwiches(sector: Sector, relations: Sequence[NCPoly]) -> Iterator[Tuple[Sandwich, NCPoly]]:
    """All products u·r·v of a relation with words that land in ``sector``"""
    for frame in sandwich_frames(sector, relations):
        relation = relations[frame.relation]
        yield frame, NCPoly(relation.ring, {frame.left + w + frame.right: c for w, c in relation.terms.items()})


def sandwich_frames(sector: Sector, relations: Sequence[NCPoly]) -> Iterator[Sandwich]:
    """
    Outer words (u, v) around each relation r with u·r·v in ``sector``

    Relations that are zero, inhomogeneous or too large for the sector are
    skipped.
    """
    target = sector.counts_map()
    colours = sector.colours
    for index, relation in enumerate(relations):
        if not relation or not relation.is_homogeneous():
            continue
        rel_counts = multidegree(next(iter(relation.terms)))
        if any(target.get(c, 0) < n for c, n in rel_counts.items()):
            continue
        remaining = [target[c] - rel_counts.get(c, 0) for c in colours]
        free = sum(remaining)
        for size in range(free + 1):
            for left_counts in _split_counts(remaining, size):
                right_counts = [r - l for r, l in zip(remaining, left_counts)]
                for u in _words(colours, list(left_counts)):
                    for v in _words(colours, right_counts):
                        yield Sandwich(u, index, v)


def solve_membership(
    ring: ScalarRing,
    target: Mapping[Hashable, FracElement],
    candidates: Sequence[Mapping[Hashable, FracElement]],
    order_key: Optional[Callable[[Hashable], tuple]] = None
) -> Tuple[Vector, Optional[Dict[int, FracElement]], int]:
    """
    Decide whether ``target`` lies in the span of ``candidates``

    A first untracked pass finds an independent subset and the remainder;
    only for members is the elimination repeated with tracking on that
    subset to produce the combination.

    Returns:
        (remainder, combination or None, rank)
    """
    span = EchelonSpan(ring, order_key)
    span.extend(candidates)
    remainder, _ = span.reduce(target)
    if remainder:
        return remainder, None, span.rank

    tracked = EchelonSpan(ring, order_key, track=True)
    basis = span.sources
    tracked.extend(candidates[i] for i in basis)
    leftover, combination = tracked.reduce(target)
    if leftover:
        raise ValidationException("Tracked elimination disagrees with the untracked pass")
    return remainder, {basis[i]: c for i, c in combination.items() if c}, span.rank


def _check_membership_input(target: NCPoly, degree_bound: Optional[int]) -> None:
    if not target.is_homogeneous():
        raise ValidationException("Membership target must be homogeneous", {'target': target.format()})
    degree = max(target.degrees())
    if degree_bound is not None and degree > degree_bound:
        raise ValidationException(
            "Membership target degree exceeds the bound",
            {'degree': degree, 'degree_bound': degree_bound}
        )


def ideal_membership(
    target: NCPoly,
    relations: Sequence[NCPoly],
    degree_bound: Optional[int] = None,
    settings: Optional[VerificationSettings] = None,
    colour_order: Sequence[FracElement] = ()
) -> MembershipResult:
    """
    Two-sided ideal membership inside the sector of ``target``

    Args:
        target: Homogeneous polynomial
        relations: Homogeneous generators of the ideal
        degree_bound: Largest admissible target degree
        settings: Sector limit
        colour_order: Colour precedence for the word order

    Returns:
        MembershipResult: With a checked certificate for members and the
        reduced normal form as residual otherwise

    Raises:
        SectorLimitException: If the sector exceeds ``max_sector_dim``
    """
    settings = settings or VerificationSettings()
    ring = target.ring
    if not target:
        return {
            'member': True, 'sector_dim': 0, 'rank': 0,
            'certificate': {'target': '0', 'combination': []}, 'certificate_verified': True,
        }
    _check_membership_input(target, degree_bound)
    sector = Sector.of_word(next(iter(target.terms)), colour_order)
    sector.require(settings.max_sector_dim)

    labels: List[Sandwich] = []
    vectors: List[Vector] = []
    for sandwich, product in sandwiches(sector, relations):
        labels.append(sandwich)
        vectors.append(dict(product.terms))
    label = f"Membership in sector {sector.describe(ring)} (dim {sector.dimension}, {len(vectors)} candidates)"
    with timed(logger, label):
        remainder, combination, rank = solve_membership(ring, target.terms, vectors, sector.word_key)
    result: MembershipResult = {'member': combination is not None, 'sector_dim': sector.dimension, 'rank': rank}
    if combination is None:
        result['residual'] = NCPoly(ring, remainder).format()
        return result

    terms: List[CertificateTerm] = []
    rebuilt = NCPoly(ring)
    for index in sorted(combination):
        sandwich, coeff = labels[index], combination[index]
        terms.append({
            'left': word_text(sandwich.left, ring),
            'relation': sandwich.relation,
            'right': word_text(sandwich.right, ring),
            'coeff': ring.format(coeff),
        })
        rebuilt = rebuilt + (NCPoly.word(ring, sandwich.left) * relations[sandwich.relation]
                             * NCPoly.word(ring, sandwich.right)).scale(coeff)
    certificate: Certificate = {'target': target.format(), 'combination': terms}
    result['certificate'] = certificate
    result['certificate_verified'] = rebuilt == target
    return result


def pair_membership(
    target: PairPoly,
    relations: Sequence[NCPoly],
    settings: Optional[VerificationSettings] = None,
    colour_order: Sequence[FracElement] = ()
) -> MembershipResult:
    """
    Membership of ``target`` in I ⊗ A' + A ⊗ I'

    I is the two-sided ideal generated by ``relations`` and I' its copy in
    the second tensor factor. The target must lie in one pair sector.
    """
    settings = settings or VerificationSettings()
    ring = target.ring
    if not target:
        return {
            'member': True, 'sector_dim': 0, 'rank': 0,
            'certificate': {'target': '0', 'combination': []}, 'certificate_verified': True,
        }
    sector = PairSector.of_key(next(iter(target.terms)), colour_order)
    outside = [k for k in target.terms if not sector.contains(k)]
    if outside:
        raise ValidationException("Membership target must lie in one pair sector", {'target': target.format()})
    sector.require(settings.max_sector_dim)

    labels: List[Tuple[str, Sandwich, NCWord]] = []
    vectors: List[Vector] = []
    right_basis = list(sector.right.basis())
    for sandwich, product in sandwiches(sector.left, relations):
        for w in right_basis:
            labels.append(('left', sandwich, w))
            vectors.append({(u, w): c for u, c in product.terms.items()})
    left_basis = list(sector.left.basis())
    for sandwich, product in sandwiches(sector.right, relations):
        for w in left_basis:
            labels.append(('right', sandwich, w))
            vectors.append({(w, u): c for u, c in product.terms.items()})
    with timed(logger, f"Pair membership (dim {sector.dimension}, {len(vectors)} candidates)"):
        remainder, combination, rank = solve_membership(ring, target.terms, vectors, sector.word_key)
    result: MembershipResult = {'member': combination is not None, 'sector_dim': sector.dimension, 'rank': rank}
    if combination is None:
        result['residual'] = PairPoly(ring, remainder).format()
        return result

    terms: List[CertificateTerm] = []
    rebuilt = PairPoly(ring)
    for index in sorted(combination):
        side, sandwich, cofactor = labels[index]
        coeff = combination[index]
        terms.append({
            'left': word_text(sandwich.left, ring),
            'relation': sandwich.relation,
            'right': word_text(sandwich.right, ring),
            'coeff': ring.format(coeff),
            'side': side,
            'cofactor': word_text(cofactor, ring),
        })
        inner = (NCPoly.word(ring, sandwich.left) * relations[sandwich.relation]
                 * NCPoly.word(ring, sandwich.right)).scale(coeff)
        other = NCPoly.word(ring, cofactor)
        rebuilt = rebuilt + (PairPoly.tensor(inner, other) if side == 'left' else PairPoly.tensor(other, inner))
    result['certificate'] = {'target': target.format(), 'combination': terms}
    result['certificate_verified'] = rebuilt == target
    return result


# ----------------------------------------------------------------------------
# Membership at random points
# ----------------------------------------------------------------------------

MODULUS = 2 ** 61 - 1


class ModularSpan:
    """
    Echelon basis of a span over GF(MODULUS)

    Keys are column indices. Rows keep the invariant of :class:`EchelonSpan`;
    the pivot of a new row is its smallest column.
    """

    def __init__(self, modulus: int = MODULUS):
        self.modulus = modulus
        self._rows: List[Tuple[int, Dict[int, int]]] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Mapping[int, int]) -> Dict[int, int]:
        p = self.modulus
        remainder = {k: v % p for k, v in vector.items() if v % p}
        for pivot, row in self._rows:
            c = remainder.get(pivot)
            if not c:
                continue
            for key, value in row.items():
                total = (remainder.get(key, 0) - c * value) % p
                if total:
                    remainder[key] = total
                else:
                    remainder.pop(key, None)
        return remainder

    def add(self, vector: Mapping[int, int]) -> bool:
        remainder = self.reduce(vector)
        if not remainder:
            return False
        pivot = min(remainder)
        inverse = pow(remainder[pivot], -1, self.modulus)
        self._rows.append((pivot, {k: v * inverse % self.modulus for k, v in remainder.items()}))
        return True


def _residue(ring: ScalarRing, value: FracElement, point: Mapping[str, Fraction], modulus: int) -> int:
    """value(point) mod ``modulus``; ScalarException when a denominator vanishes"""
    exact = constant_value(ring.substitute(value, point))
    if exact.denominator % modulus == 0:
        raise ScalarException("Denominator divisible by the modulus", {'value': str(exact)})
    return exact.numerator * pow(exact.denominator, -1, modulus) % modulus


def _residues(ring: ScalarRing, poly: NCPoly, point: Mapping[str, Fraction], modulus: int) -> Dict[NCWord, int]:
    values = {w: _residue(ring, c, point, modulus) for w, c in poly.terms.items()}
    return {w: v for w, v in values.items() if v}


def point_membership(
    target: NCPoly,
    relations: Sequence[NCPoly],
    degree_bound: Optional[int] = None,
    settings: Optional[VerificationSettings] = None,
    colour_order: Sequence[FracElement] = ()
) -> MembershipResult:
    """
    Two-sided ideal membership decided at seeded random rational points

    Coefficients are evaluated at each point and reduced modulo MODULUS, so
    the elimination runs on integers. If the target lies in the ideal over
    the field, it lies in it at every point where the combination has no
    pole; a non-member verdict is therefore wrong only when a point or the
    prime hits a denominator. No certificate is produced.

    ``settings.rank_guard_points`` points are used (at least one); the
    verdict is ``member`` only if every admissible point says so, and
    ``consistent`` records whether the points agree.

    Raises:
        SectorLimitException: If the sector exceeds ``max_sector_dim``
        ScalarException: If no admissible point is found
    """
    settings = settings or VerificationSettings()
    ring = target.ring
    if not target:
        return {'member': True, 'sector_dim': 0, 'rank': 0, 'method': 'random points', 'points': [], 'consistent': True}
    _check_membership_input(target, degree_bound)
    sector = Sector.of_word(next(iter(target.terms)), colour_order)
    sector.require(settings.max_sector_dim)

    columns = {word: n for n, word in enumerate(sector.basis())}
    placed = [
        (frame.relation, [(w, columns[frame.left + w + frame.right]) for w in relations[frame.relation].terms])
        for frame in sandwich_frames(sector, relations)
    ]
    rng = random.Random(settings.guard_seed)
    label = f"Point membership in sector {sector.describe(ring)} (dim {sector.dimension}, {len(placed)} candidates)"

    outcomes: List[Dict[str, Any]] = []
    with timed(logger, label):
        for _ in range(max(1, settings.rank_guard_points)):
            outcomes.append(_decide_at_point(ring, target, relations, placed, columns, rng))

    decided = [o for o in outcomes if not o.get('skipped')]
    if not decided:
        raise ScalarException("No admissible evaluation point", {'attempts': GUARD_RETRIES * len(outcomes)})
    verdicts = {o['member'] for o in decided}
    if len(verdicts) > 1:
        logger.warning(f"Membership verdicts disagree across points in sector {sector.describe(ring)}")
    return {
        'member': all(o['member'] for o in decided),
        'sector_dim': sector.dimension,
        'rank': max(o['rank'] for o in decided),
        'method': 'random points',
        'points': outcomes,
        'consistent': len(verdicts) == 1,
    }


def _decide_at_point(
    ring: ScalarRing,
    target: NCPoly,
    relations: Sequence[NCPoly],
    placed: Sequence[Tuple[int, Sequence[Tuple[NCWord, int]]]],
    columns: Mapping[NCWord, int],
    rng: random.Random
) -> Dict[str, Any]:
    used = sorted({index for index, _ in placed})
    for _attempt in range(GUARD_RETRIES):
        point = random_point(ring, rng)
        try:
            residues = {index: _residues(ring, relations[index], point, MODULUS) for index in used}
            goal = {columns[w]: v for w, v in _residues(ring, target, point, MODULUS).items()}
        except ScalarException:
            continue
        span = ModularSpan()
        for index, words in placed:
            coeffs = residues[index]
            span.add({column: coeffs[w] for w, column in words if w in coeffs})
        remainder = span.reduce(goal)
        return {
            'point': {name: str(value) for name, value in point.items()},
            'member': not remainder,
            'rank': span.rank,
        }
    logger.warning(f"Membership point skipped: {GUARD_RETRIES} random points hit a pole")
    return {'skipped': True}
