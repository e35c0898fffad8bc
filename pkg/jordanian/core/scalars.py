"""
Jordanian Scalar Field
======================

Exact rational functions over QQ in the deformation parameters ``h``, ``s``
and a finite set of colour symbols.

Values are ``sympy.polys.fields.FracElement`` instances. They are immutable,
gcd-reduced and canonical, so ``==`` is structural equality. One
:class:`ScalarRing` exists per colour set; rings are cached and shared.

Symbol order is ``h < s < colours`` (colours sorted lexicographically); the
monomial order is graded lexicographic.

Expression grammar accepted by :func:`parse_scalar`::

    expr     ::= term { ("+" | "-") term }
    term     ::= unary { ("*" | "/") unary }
    unary    ::= ("+" | "-") unary | power
    power    ::= atom [ "^" power ]
    atom     ::= integer | identifier | "(" expr ")"
    integer  ::= digit { digit }

The exponent of ``^`` must evaluate to an integer constant, so negative
powers are written ``h^(-1)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import logging
import re

import pyparsing as pp
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from .exceptions import ScalarException, ExpressionException
from .types import ScalarStyle


logger = logging.getLogger('jordanian.scalars')

RationalFunction = FracElement
ScalarLike = Union[FracElement, int, Fraction, str]

PARAMETERS: Tuple[str, str] = ('h', 's')

_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')

GREEK_LETTERS = frozenset({
    'alpha', 'beta', 'gamma', 'delta', 'epsilon', 'zeta', 'eta', 'theta',
    'iota', 'kappa', 'lambda', 'mu', 'nu', 'xi', 'pi', 'rho', 'sigma',
    'tau', 'upsilon', 'phi', 'chi', 'psi', 'omega',
})


# ----------------------------------------------------------------------------
# Grammar
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class _Name:
    """Identifier token with its source position"""
    text: str
    position: int


def _build_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    name = pp.Word(pp.alphas + '_', pp.alphanums + '_').set_parse_action(
        lambda s, loc, t: _Name(t[0], loc)
    )
    return pp.infix_notation(
        integer | name,
        [
            (pp.Literal('^'), 2, pp.OpAssoc.RIGHT),
            (pp.one_of('+ -'), 1, pp.OpAssoc.RIGHT),
            (pp.one_of('* /'), 2, pp.OpAssoc.LEFT),
            (pp.one_of('+ -'), 2, pp.OpAssoc.LEFT),
        ],
    )


_EXPRESSION = _build_grammar()


# ----------------------------------------------------------------------------
# Ring
# ----------------------------------------------------------------------------

class ScalarRing:
    """
    Field of rational functions Q(h, s, colours...)

    Use :func:`scalar_ring` rather than the constructor so that equal colour
    sets share one field.
    """

    def __init__(self, colours: Iterable[str] = ()):
        """
        Args:
            colours: Colour symbol names (any order, duplicates ignored)
        """
        names = sorted(set(colours))
        for name in names:
            if not _IDENTIFIER.match(name):
                raise ScalarException(f"Invalid colour symbol '{name}'", {'symbol': name})
            if name in PARAMETERS:
                raise ScalarException(
                    f"Colour symbol '{name}' clashes with a deformation parameter",
                    {'symbol': name}
                )

        self.colours: Tuple[str, ...] = tuple(names)
        self.symbols: Tuple[str, ...] = PARAMETERS + self.colours
        field_and_gens = field([Symbol(n) for n in self.symbols], QQ, grlex)
        self.field = field_and_gens[0]
        self._gens: Dict[str, FracElement] = dict(zip(self.symbols, field_and_gens[1:]))
        self._index: Dict[str, int] = {n: i for i, n in enumerate(self.symbols)}
        # colours print before the parameters: "\lambda s", not "s \lambda"
        self._print_order: Tuple[int, ...] = tuple(range(2, len(self.symbols))) + (0, 1)

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------

    @property
    def zero(self) -> FracElement:
        return self.field.zero

    @property
    def one(self) -> FracElement:
        return self.field.one

    @property
    def h(self) -> FracElement:
        return self._gens['h']

    @property
    def s(self) -> FracElement:
        return self._gens['s']

    def gen(self, name: str) -> FracElement:
        """Generator for a parameter or colour name"""
        try:
            return self._gens[name]
        except KeyError:
            raise ScalarException(f"Unknown symbol '{name}'", {'symbol': name, 'symbols': list(self.symbols)})

    def colour(self, value: ScalarLike) -> FracElement:
        """Colour value: a declared colour symbol, a rational constant or an expression"""
        return self(value)

    def owns(self, x: FracElement) -> bool:
        return isinstance(x, FracElement) and x.field is self.field

    def __call__(self, value: ScalarLike) -> FracElement:
        """Convert ``value`` into this field"""
        if isinstance(value, FracElement):
            if value.field is self.field:
                return value
            return self.convert(value)
        if isinstance(value, bool):
            raise ScalarException("Booleans are not scalars", {'value': value})
        if isinstance(value, int):
            return self.field(value)
        if isinstance(value, Fraction):
            return self.field(QQ(value.numerator, value.denominator))
        if isinstance(value, str):
            return self.parse(value)
        raise ScalarException(f"Cannot convert {type(value).__name__} to a scalar", {'value': repr(value)})

    def __repr__(self) -> str:
        return f"ScalarRing({', '.join(self.symbols)})"

    # ------------------------------------------------------------------
    # Arithmetic helpers
    # ------------------------------------------------------------------

    def power(self, x: FracElement, n: int) -> FracElement:
        """``x**n`` for any integer ``n``; negative powers keep canonical form"""
        if n == 0:
            return self.one
        if n > 0:
            return x ** n
        if not x:
            raise ScalarException("Zero raised to a negative power", {'exponent': n})
        return self.one / x ** (-n)

    def symbol_name(self, x: FracElement) -> str:
        """Name of a generator element"""
        for name, gen in self._gens.items():
            if gen == x:
                return name
        raise ScalarException(f"'{x}' is not a symbol of {self!r}")

    # ------------------------------------------------------------------
    # Substitution
    # ------------------------------------------------------------------

    def substitute(
        self,
        x: FracElement,
        bindings: Mapping[Union[str, FracElement], ScalarLike],
        target: Optional['ScalarRing'] = None
    ) -> FracElement:
        """
        Simultaneous substitution of symbols in ``x``

        Args:
            x: Element of this ring
            bindings: Symbol (name or generator) -> replacement value
            target: Ring of the result (default: this ring)

        Returns:
            FracElement: Canonical result in ``target``
        """
        target = target or self
        x = self(x)
        images = self._images(bindings, target)
        numerator = _evaluate_poly(x.numer, images, target, self.symbols)
        denominator = _evaluate_poly(x.denom, images, target, self.symbols)
        if not denominator:
            raise ScalarException(
                "Denominator vanishes under binding",
                {'value': format_scalar(x), 'bindings': {str(k): str(v) for k, v in bindings.items()}}
            )
        return numerator / denominator

    def convert(self, x: FracElement) -> FracElement:
        """Move an element of another ring into this one, symbol by symbol"""
        return ScalarRing.of(x).substitute(x, {}, target=self)

    def _images(self, bindings: Mapping, target: 'ScalarRing') -> List[Optional[FracElement]]:
        by_name: Dict[str, FracElement] = {}
        for key, value in bindings.items():
            name = key if isinstance(key, str) else self.symbol_name(key)
            if name not in self._index:
                raise ScalarException(f"Unknown symbol '{name}' in bindings", {'symbol': name})
            by_name[name] = target(value)

        images: List[Optional[FracElement]] = []
        for name in self.symbols:
            if name in by_name:
                images.append(by_name[name])
            elif name in target._index:
                images.append(target.gen(name))
            else:
                images.append(None)
        return images

    # ------------------------------------------------------------------
    # Parsing and formatting
    # ------------------------------------------------------------------

    def parse(self, text: str) -> FracElement:
        """Parse an expression in this ring's symbols"""
        try:
            tree = _EXPRESSION.parse_string(text, parse_all=True)
        except pp.ParseBaseException as e:
            raise ExpressionException(
                f"Syntax error at position {e.loc}: {e.msg}",
                {'position': e.loc, 'text': text}
            )
        return self._evaluate(tree[0], text)

    def _evaluate(self, node, text: str) -> FracElement:
        if isinstance(node, int):
            return self.field(node)
        if isinstance(node, _Name):
            if node.text not in self._gens:
                raise ExpressionException(
                    f"Unknown symbol '{node.text}'",
                    {'symbol': node.text, 'position': node.position, 'text': text}
                )
            return self._gens[node.text]

        tokens = list(node)
        if len(tokens) == 2:
            operand = self._evaluate(tokens[1], text)
            return -operand if tokens[0] == '-' else operand

        if tokens[1] == '^':
            result = self._evaluate(tokens[-1], text)
            for base in reversed(tokens[:-1:2]):
                result = self.power(self._evaluate(base, text), _integer_exponent(result, text))
            return result

        result = self._evaluate(tokens[0], text)
        for op, operand in zip(tokens[1::2], tokens[2::2]):
            result = scalar_arith(result, self._evaluate(operand, text), _OPERATORS[op])
        return result

    def format(self, x: FracElement, style: ScalarStyle = 'plain') -> str:
        """Render ``x`` as plain text or LaTeX"""
        x = self(x)
        numerator = self._format_poly(x.numer, style)
        if x.denom == x.field.ring.one:
            return numerator
        denominator = self._format_poly(x.denom, style)
        if style == 'latex':
            return f"\\frac{{{numerator}}}{{{denominator}}}"
        if len(x.numer) > 1:
            numerator = f"({numerator})"
        if not _is_single_factor(x.denom):
            denominator = f"({denominator})"
        return f"{numerator}/{denominator}"

    def _format_poly(self, poly: PolyElement, style: ScalarStyle) -> str:
        if not poly:
            return '0'
        parts: List[str] = []
        for position, (monom, coeff) in enumerate(reversed(poly.terms(grlex))):
            negative = coeff < 0
            body = self._format_term(monom, -coeff if negative else coeff, style)
            if style == 'latex':
                sign = ('-' if negative else '') if position == 0 else ('-' if negative else '+')
            else:
                sign = ('-' if negative else '') if position == 0 else (' - ' if negative else ' + ')
            parts.append(sign + body)
        return ''.join(parts)

    def _format_term(self, monom: Tuple[int, ...], coeff, style: ScalarStyle) -> str:
        factors: List[str] = []
        for index in self._print_order:
            exponent = monom[index]
            if not exponent:
                continue
            name = self._symbol_text(self.symbols[index], style)
            if exponent == 1:
                factors.append(name)
            elif style == 'latex':
                factors.append(f"{name}^{{{exponent}}}")
            else:
                factors.append(f"{name}^{exponent}")

        numer, denom = int(QQ.numer(coeff)), int(QQ.denom(coeff))
        if style == 'latex':
            if denom != 1:
                factors.insert(0, f"\\frac{{{numer}}}{{{denom}}}")
            elif numer != 1 or not factors:
                factors.insert(0, str(numer))
            return ' '.join(factors)

        if denom != 1:
            factors.insert(0, f"{numer}/{denom}")
        elif numer != 1 or not factors:
            factors.insert(0, str(numer))
        return '*'.join(factors)

    @staticmethod
    def _symbol_text(name: str, style: ScalarStyle) -> str:
        if style != 'latex':
            return name
        if name.endswith('prime') and len(name) > len('prime'):
            return ScalarRing._symbol_text(name[:-len('prime')], style) + "'"
        if name in GREEK_LETTERS:
            return '\\' + name
        if '_' in name:
            head, _, tail = name.partition('_')
            return f"{ScalarRing._symbol_text(head, style)}_{{{tail}}}"
        return name

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    @staticmethod
    def of(*elements: FracElement) -> 'ScalarRing':
        """Ring that owns the given elements"""
        fields = {x.field for x in elements if isinstance(x, FracElement)}
        if not fields:
            raise ScalarException("No scalar element to take the ring from")
        if len(fields) > 1:
            raise ScalarException("Scalars belong to different fields", {'fields': [str(f) for f in fields]})
        symbols = [str(s) for s in fields.pop().symbols]
        return scalar_ring(tuple(symbols[len(PARAMETERS):]))


@lru_cache(maxsize=None)
def _cached_ring(colours: Tuple[str, ...]) -> ScalarRing:
    return ScalarRing(colours)


def scalar_ring(colours: Iterable[str] = ()) -> ScalarRing:
    """Shared ring for a colour set"""
    return _cached_ring(tuple(sorted(set(colours))))


# ----------------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------------

_OPERATORS = {'+': 'add', '-': 'sub', '*': 'mul', '/': 'div'}


def scalar_arith(a: FracElement, b: Optional[FracElement], op: str) -> FracElement:
    """
    Field operation on two scalars of the same ring

    Args:
        a: Left operand
        b: Right operand (ignored for ``neg``)
        op: One of add, sub, mul, div, neg

    Returns:
        FracElement: Canonical result
    """
    if op == 'neg':
        return -a
    if b is None:
        raise ScalarException(f"Operation '{op}' needs two operands")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        if not b:
            raise ScalarException("Division by the zero rational function", {'numerator': str(a)})
        return a / b
    raise ScalarException(f"Unknown scalar operation '{op}'", {'op': op})


def substitute(
    x: FracElement,
    bindings: Mapping[Union[str, FracElement], ScalarLike],
    target: Optional[ScalarRing] = None
) -> FracElement:
    """Simultaneous substitution; see :meth:`ScalarRing.substitute`"""
    return ScalarRing.of(x).substitute(x, bindings, target)


def parse_scalar(text: str, ring: Optional[ScalarRing] = None, colours: Sequence[str] = ()) -> FracElement:
    """
    Parse ``text`` into a rational function

    Args:
        text: Expression following the module grammar
        ring: Ring to parse into; built from ``colours`` when omitted
        colours: Colour symbols to declare when no ring is given

    Returns:
        FracElement: Parsed value
    """
    ring = ring or scalar_ring(colours)
    return ring.parse(text)


def format_scalar(x: FracElement, style: ScalarStyle = 'plain') -> str:
    """Render ``x``; ``parse_scalar(format_scalar(x))`` gives ``x`` back"""
    return ScalarRing.of(x).format(x, style)


def f_scalar(
    lam: FracElement,
    mu: FracElement,
    h: Optional[FracElement] = None,
    s: Optional[FracElement] = None
) -> FracElement:
    """h^2 - lam*mu*s^2 - h*s*(lam - mu); h and s default to the ring symbols"""
    ring = ScalarRing.of(lam, mu)
    h = ring.h if h is None else h
    s = ring.s if s is None else s
    return h ** 2 - lam * mu * s ** 2 - h * s * (lam - mu)


def is_polynomial(x: FracElement) -> bool:
    return x.denom == x.field.ring.one


def is_constant(x: FracElement) -> bool:
    return x.numer.is_ground and x.denom.is_ground


def parameter_order(x: FracElement) -> Optional[int]:
    """Lowest total degree in (h, s) over the numerator terms; None for zero"""
    if not x:
        return None
    return min(monom[0] + monom[1] for monom in x.numer.monoms())


def degree_measure(x: FracElement) -> int:
    """Total degree of numerator plus denominator"""
    return _total_degree(x.numer) + _total_degree(x.denom)


def monic_parts(x: FracElement) -> Tuple[PolyElement, PolyElement]:
    """Numerator and denominator rescaled so the denominator is monic under grlex"""
    lc = x.denom.LC
    return x.numer.quo_ground(lc), x.denom.quo_ground(lc)


def constant_value(x: FracElement) -> Fraction:
    """Rational value of a constant element"""
    if not is_constant(x):
        raise ScalarException(f"'{format_scalar(x)}' is not a constant")
    numer, denom = x.numer.LC, x.denom.LC
    return (Fraction(int(QQ.numer(numer)), int(QQ.denom(numer)))
            / Fraction(int(QQ.numer(denom)), int(QQ.denom(denom))))


def symbols_in(text: str) -> List[str]:
    """Identifiers used in an expression, in order of appearance"""
    found: List[str] = []
    for name in re.findall(r'[A-Za-z_][A-Za-z0-9_]*', text):
        if name not in found:
            found.append(name)
    return found


def _total_degree(poly: PolyElement) -> int:
    if not poly:
        return 0
    return max(sum(monom) for monom in poly.monoms())


def _is_single_factor(poly: PolyElement) -> bool:
    if poly.is_ground:
        return True
    if len(poly) != 1:
        return False
    monom, coeff = poly.terms()[0]
    if coeff != 1:
        return False
    return sum(1 for e in monom if e) == 1 and max(monom) == 1


def _integer_exponent(value: FracElement, text: str) -> int:
    if not value:
        return 0
    if is_constant(value):
        constant = QQ.to_sympy(value.numer.LC) / QQ.to_sympy(value.denom.LC)
        if constant.is_Integer:
            return int(constant)
    raise ExpressionException(
        f"Exponent must be an integer constant, got '{format_scalar(value)}'",
        {'text': text}
    )


def _evaluate_poly(
    poly: PolyElement,
    images: Sequence[Optional[FracElement]],
    target: ScalarRing,
    names: Sequence[str]
) -> FracElement:
    total = target.zero
    powers: Dict[Tuple[int, int], FracElement] = {}
    for monom, coeff in poly.iterterms():
        term = target.field(coeff)
        for index, exponent in enumerate(monom):
            if not exponent:
                continue
            image = images[index]
            if image is None:
                raise ScalarException(
                    f"Symbol '{names[index]}' has no image in {target!r}",
                    {'symbol': names[index]}
                )
            key = (index, exponent)
            if key not in powers:
                powers[key] = image ** exponent
            term = term * powers[key]
        total = total + term
    return total
