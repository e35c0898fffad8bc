"""
Representation Components
=========================

Generators and Hopf maps of U_{h,s}gl(2) and the fundamental
representation π_η.
"""

from .generators import GeneratorSymbol, TensorExpression
from .rep import fundamental_rep, universal_R_rep

__all__ = ['GeneratorSymbol', 'TensorExpression', 'fundamental_rep', 'universal_R_rep']
