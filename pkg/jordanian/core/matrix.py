"""
Jordanian Parameter Matrices
============================

Dense matrices over a :class:`~jordanian.core.scalars.ScalarRing` with
Kronecker products, tensor-leg embeddings, the flip operator, nilpotent
exponentials and exact inverses.

Basis vector ``e_i ⊗ e_j`` of ``d ⊗ d`` sits at flat index ``d*i + j``
(zero-based), i.e. ``d*(i-1) + j`` one-based.
"""

from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy.polys.fields import FracElement

from .exceptions import MatrixException
from .scalars import ScalarRing, ScalarLike


Scalar = Union[FracElement, int]


@dataclass(frozen=True)
class ParamMatrix:
    """Immutable row-major matrix of rational functions"""
    rows: int
    cols: int
    entries: Tuple[FracElement, ...]
    ring: ScalarRing = field(compare=False, repr=False)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise MatrixException("Matrix dimensions must be positive", {'rows': self.rows, 'cols': self.cols})
        if len(self.entries) != self.rows * self.cols:
            raise MatrixException(
                "Entry count does not match dimensions",
                {'rows': self.rows, 'cols': self.cols, 'entries': len(self.entries)}
            )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], ring: ScalarRing) -> 'ParamMatrix':
        """Build from nested rows; values are converted into ``ring``"""
        if not rows or not rows[0]:
            raise MatrixException("Matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise MatrixException("Rows have different lengths", {'lengths': [len(r) for r in rows]})
        entries = tuple(ring(value) for row in rows for value in row)
        return cls(len(rows), width, entries, ring)

    @classmethod
    def identity(cls, n: int, ring: ScalarRing) -> 'ParamMatrix':
        one, zero = ring.one, ring.zero
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)), ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: ScalarRing) -> 'ParamMatrix':
        return cls(rows, cols, (ring.zero,) * (rows * cols), ring)

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, ring: ScalarRing) -> 'ParamMatrix':
        """Matrix unit with a single 1 at zero-based position (i, j)"""
        entries = [ring.zero] * (rows * cols)
        entries[i * cols + j] = ring.one
        return cls(rows, cols, tuple(entries), ring)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    def __getitem__(self, index: Tuple[int, int]) -> FracElement:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise MatrixException("Index out of range", {'index': index, 'shape': self.shape})
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row_list(self) -> List[List[FracElement]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == ParamMatrix.identity(self.rows, self.ring)

    def nonzero_entries(self) -> List[Tuple[int, int, FracElement]]:
        """Zero-based (row, col, value) for every nonzero entry"""
        return [
            (k // self.cols, k % self.cols, value)
            for k, value in enumerate(self.entries) if value
        ]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def map(self, fn: Callable[[FracElement], FracElement], ring: Optional[ScalarRing] = None) -> 'ParamMatrix':
        """Entrywise image"""
        return ParamMatrix(self.rows, self.cols, tuple(fn(x) for x in self.entries), ring or self.ring)

    def __add__(self, other: 'ParamMatrix') -> 'ParamMatrix':
        return mat_arith(self, other, 'add')

    def __sub__(self, other: 'ParamMatrix') -> 'ParamMatrix':
        return mat_arith(self, other, 'sub')

    def __neg__(self) -> 'ParamMatrix':
        return self.map(lambda x: -x)

    def __mul__(self, other: Union['ParamMatrix', Scalar]) -> 'ParamMatrix':
        if isinstance(other, ParamMatrix):
            return mat_arith(self, other, 'mul')
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> 'ParamMatrix':
        return self.scale(other)

    def scale(self, c: ScalarLike) -> 'ParamMatrix':
        c = self.ring(c)
        return self.map(lambda x: c * x)

    def transpose(self) -> 'ParamMatrix':
        return ParamMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
            self.ring
        )

    def substitute(
        self,
        bindings: Mapping[str, ScalarLike],
        target: Optional[ScalarRing] = None
    ) -> 'ParamMatrix':
        """Entrywise simultaneous substitution"""
        target = target or self.ring
        if not bindings and target is self.ring:
            return self
        return self.map(lambda x: self.ring.substitute(x, bindings, target), target)

    def __repr__(self) -> str:
        return f"ParamMatrix({self.rows}x{self.cols})"


def _check_same_ring(a: ParamMatrix, b: ParamMatrix) -> None:
    if a.ring is not b.ring:
        raise MatrixException("Matrices live over different scalar rings", {'left': repr(a.ring), 'right': repr(b.ring)})


def mat_arith(a: ParamMatrix, b: Union[ParamMatrix, ScalarLike], op: str) -> ParamMatrix:
    """
    Matrix sum, difference, product or scaling

    Args:
        a: Left operand
        b: Right operand (a scalar for ``scale``)
        op: One of add, sub, mul, scale

    Returns:
        ParamMatrix: Exact result
    """
    if op == 'scale':
        return a.scale(b)
    if not isinstance(b, ParamMatrix):
        raise MatrixException(f"Operation '{op}' needs two matrices")
    _check_same_ring(a, b)

    if op in ('add', 'sub'):
        if a.shape != b.shape:
            raise MatrixException("Dimension mismatch", {'op': op, 'left': a.shape, 'right': b.shape})
        if op == 'add':
            entries = tuple(x + y for x, y in zip(a.entries, b.entries))
        else:
            entries = tuple(x - y for x, y in zip(a.entries, b.entries))
        return ParamMatrix(a.rows, a.cols, entries, a.ring)

    if op == 'mul':
        if a.cols != b.rows:
            raise MatrixException("Dimension mismatch", {'op': op, 'left': a.shape, 'right': b.shape})
        zero = a.ring.zero
        entries = []
        for i in range(a.rows):
            row = a.entries[i * a.cols:(i + 1) * a.cols]
            for j in range(b.cols):
                acc = zero
                for k, x in enumerate(row):
                    if x:
                        y = b.entries[k * b.cols + j]
                        if y:
                            acc = acc + x * y
                entries.append(acc)
        return ParamMatrix(a.rows, b.cols, tuple(entries), a.ring)

    raise MatrixException(f"Unknown matrix operation '{op}'", {'op': op})


def commutator(a: ParamMatrix, b: ParamMatrix) -> ParamMatrix:
    """ab - ba"""
    return a * b - b * a


def kron(a: ParamMatrix, b: ParamMatrix) -> ParamMatrix:
    """Kronecker product a ⊗ b"""
    _check_same_ring(a, b)
    entries = []
    for i in range(a.rows):
        for k in range(b.rows):
            for j in range(a.cols):
                x = a.entries[i * a.cols + j]
                for l in range(b.cols):
                    entries.append(x * b.entries[k * b.cols + l] if x else x)
    return ParamMatrix(a.rows * b.rows, a.cols * b.cols, tuple(entries), a.ring)


def kron_all(factors: Iterable[ParamMatrix]) -> ParamMatrix:
    """Left-to-right Kronecker product of a non-empty sequence"""
    factors = list(factors)
    if not factors:
        raise MatrixException("Kronecker product of an empty sequence")
    result = factors[0]
    for factor in factors[1:]:
        result = kron(result, factor)
    return result


def flip_matrix(d: int, ring: ScalarRing) -> ParamMatrix:
    """Permutation P with P(e_i ⊗ e_j) = e_j ⊗ e_i"""
    if d < 1:
        raise MatrixException("Flip dimension must be positive", {'d': d})
    entries = [ring.zero] * (d ** 4)
    n = d * d
    for i in range(d):
        for j in range(d):
            entries[(j * d + i) * n + (i * d + j)] = ring.one
    return ParamMatrix(n, n, tuple(entries), ring)


def leg_embed(a: ParamMatrix, legs: Tuple[int, int], d: int) -> ParamMatrix:
    """
    Embed an operator on ``d ⊗ d`` into ``d ⊗ d ⊗ d``

    The first tensor factor of ``a`` acts on leg ``legs[0]``, the second on
    ``legs[1]``. Legs (1,3) conjugate ``a ⊗ I`` by the exchange of legs 2
    and 3; reversed pairs conjugate ``a`` by the flip first.

    Args:
        a: d²×d² matrix
        legs: Ordered pair of distinct legs from {1, 2, 3}
        d: Single-leg dimension

    Returns:
        ParamMatrix: d³×d³ matrix
    """
    if a.shape != (d * d, d * d):
        raise MatrixException("Dimension mismatch for leg embedding", {'shape': a.shape, 'd': d})
    first, second = legs
    if first == second or not {first, second} <= {1, 2, 3}:
        raise MatrixException("Legs must be two distinct values from {1, 2, 3}", {'legs': legs})

    if first > second:
        flip = flip_matrix(d, a.ring)
        return leg_embed(flip * a * flip, (second, first), d)

    eye = ParamMatrix.identity(d, a.ring)
    if (first, second) == (1, 2):
        return kron(a, eye)
    if (first, second) == (2, 3):
        return kron(eye, a)
    exchange = kron(eye, flip_matrix(d, a.ring))
    return exchange * kron(a, eye) * exchange


def nilpotent_exp(m: ParamMatrix, bound: Optional[int] = None) -> ParamMatrix:
    """
    Exact exponential of a nilpotent matrix

    Args:
        m: Square matrix with m^k = 0 for some k <= bound
        bound: Largest admissible nilpotency index (default: dimension)

    Returns:
        ParamMatrix: sum of m^i / i! for i < k
    """
    if not m.is_square:
        raise MatrixException("Exponential needs a square matrix", {'shape': m.shape})
    bound = m.rows if bound is None else bound
    total = ParamMatrix.identity(m.rows, m.ring)
    term = total
    for i in range(1, bound + 1):
        term = (term * m).scale(m.ring.one / i)
        if term.is_zero():
            return total
        total = total + term
    raise MatrixException("Matrix is not nilpotent within bound", {'bound': bound, 'shape': m.shape})


def mat_inverse(a: ParamMatrix) -> ParamMatrix:
    """
    Exact inverse by fraction-free forward elimination and back substitution

    Raises:
        MatrixException: matrix is not square or singular
    """
    if not a.is_square:
        raise MatrixException("Inverse needs a square matrix", {'shape': a.shape})
    n = a.rows
    ring = a.ring
    work = [
        row + [ring.one if i == j else ring.zero for j in range(n)]
        for i, row in enumerate(a.row_list())
    ]

    previous = ring.one
    for k in range(n):
        pivot = next((r for r in range(k, n) if work[r][k]), None)
        if pivot is None:
            raise MatrixException("Matrix is singular", {'column': k + 1})
        if pivot != k:
            work[k], work[pivot] = work[pivot], work[k]
        for i in range(k + 1, n):
            for j in range(k + 1, 2 * n):
                work[i][j] = (work[k][k] * work[i][j] - work[i][k] * work[k][j]) / previous
            work[i][k] = ring.zero
        previous = work[k][k]

    solution = [[ring.zero] * n for _ in range(n)]
    for i in reversed(range(n)):
        for col in range(n):
            acc = work[i][n + col]
            for j in range(i + 1, n):
                if work[i][j]:
                    acc = acc - work[i][j] * solution[j][col]
            solution[i][col] = acc / work[i][i]
    return ParamMatrix(n, n, tuple(x for row in solution for x in row), ring)
