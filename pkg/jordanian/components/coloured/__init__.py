"""
Coloured R-Matrix Components
============================

The 4x4 coloured R-matrix R(λ, μ), its braid operator and checks.
"""

from .rmatrix import BraidOperator, ColouredRMatrix, braid_operator, coloured_R, specialize

__all__ = ['ColouredRMatrix', 'BraidOperator', 'coloured_R', 'braid_operator', 'specialize']
