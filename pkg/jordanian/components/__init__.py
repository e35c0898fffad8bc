"""
Jordanian Components Module
===========================

Verification components:
- coloured: Coloured R-matrix, braid operator and their identities
- representation: U_{h,s}gl(2), its Hopf structure and 2x2 representations
- rtt: Noncommutative RTT algebra, ideal membership and quantum determinant
"""

__all__ = [
    'coloured',
    'representation',
    'rtt',
]
