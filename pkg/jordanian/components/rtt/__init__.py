"""
RTT Algebra Components
======================

Free algebra on coloured generators a, b, c, d; relations extracted from
R T1 T2 = T2 T1 R; exact ideal membership; the quantum determinant.
"""

from .ncpoly import NCGenerator, NCPoly, PairPoly, coproduct, t_matrix
from .linear import EchelonSpan, Sector, ideal_membership, span_compare
from .relations import RelationSet, closed_form_relations, rtt_residual
from .determinant import quantum_determinant

__all__ = [
    'NCGenerator',
    'NCPoly',
    'PairPoly',
    'coproduct',
    't_matrix',
    'EchelonSpan',
    'Sector',
    'ideal_membership',
    'span_compare',
    'RelationSet',
    'closed_form_relations',
    'rtt_residual',
    'quantum_determinant',
]
