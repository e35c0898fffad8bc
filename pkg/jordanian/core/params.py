"""
Jordanian Deformation Parameters
================================

Values taken by ``h`` and ``s`` in a computation. Symbolic runs use the ring
generators; numeric runs (``--at``) and the one-parameter case ``s = h`` use
other values of the same ring, so every derived coefficient is specialized
at construction time.
"""

from dataclasses import dataclass
from typing import List, Mapping, Optional, Tuple

from sympy.polys.fields import FracElement

from .exceptions import ScalarException
from .scalars import ScalarLike, ScalarRing, f_scalar, scalar_ring


@dataclass(frozen=True)
class Deformation:
    """h and s as elements of one ring"""
    ring: ScalarRing
    h: FracElement
    s: FracElement

    def __post_init__(self):
        if not self.h:
            raise ScalarException("h must be nonzero (representation entries contain 1/2h)")

    @classmethod
    def symbolic(cls, ring: ScalarRing) -> 'Deformation':
        return cls(ring, ring.h, ring.s)

    @classmethod
    def at(cls, ring: ScalarRing, bindings: Mapping[str, ScalarLike]) -> 'Deformation':
        """h and s taken from ``bindings`` where present, symbolic otherwise"""
        h = ring(bindings['h']) if 'h' in bindings else ring.h
        s = ring(bindings['s']) if 's' in bindings else ring.s
        return cls(ring, h, s)

    @classmethod
    def one_parameter(cls, ring: ScalarRing) -> 'Deformation':
        """The s = h specialization"""
        return cls(ring, ring.h, ring.h)

    def f(self, lam: FracElement, mu: FracElement) -> FracElement:
        return f_scalar(lam, mu, self.h, self.s)

    def plus(self, colour: FracElement) -> FracElement:
        """h + colour*s"""
        return self.h + colour * self.s

    def minus(self, colour: FracElement) -> FracElement:
        """h - colour*s"""
        return self.h - colour * self.s

    @property
    def is_symbolic(self) -> bool:
        return self.h == self.ring.h and self.s == self.ring.s

    def describe(self) -> dict:
        return {'h': self.ring.format(self.h), 's': self.ring.format(self.s)}


def resolve(
    *values: ScalarLike,
    params: Optional[Deformation] = None
) -> Tuple[Deformation, List[FracElement]]:
    """
    Bring colour values and parameters into one ring

    Without ``params`` the ring is taken from the FracElement values (or
    the colourless ring) and h, s stay symbolic.

    Returns:
        Tuple: (parameters, colour values as ring elements)
    """
    if params is None:
        elements = [v for v in values if isinstance(v, FracElement)]
        ring = ScalarRing.of(*elements) if elements else scalar_ring()
        params = Deformation.symbolic(ring)
    return params, [params.ring(v) for v in values]
