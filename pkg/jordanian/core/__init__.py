"""
Jordanian Core Module
=====================

Basic building blocks:
- exceptions: Custom exceptions
- types: Data types
- scalars: The field Q(h, s, colours)
- matrix: Exact matrices, Kronecker products and leg embeddings
- base: Abstract suite and run context
- pipeline / builder: Suite orchestration
"""

from .exceptions import (
    JordanianException,
    ScalarException,
    ExpressionException,
    MatrixException,
    SectorLimitException,
    ConfigException,
    ValidationException,
    PipelineException,
)

__all__ = [
    'JordanianException',
    'ScalarException',
    'ExpressionException',
    'MatrixException',
    'SectorLimitException',
    'ConfigException',
    'ValidationException',
    'PipelineException',
]
