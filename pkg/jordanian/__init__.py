"""
Jordanian
=========

Exact symbolic verification of the coloured Jordanian quantum group
GL_{h,s}(2) and its coloured R-matrix.

Main components:
- Core: Scalars over Q(h, s, colours), matrices, reports, pipeline
- Components: Coloured R-matrix, U_{h,s}gl(2) representations, RTT algebra
- Utils: Logging and serialization
- CLI: Command-line interface

Example:
    >>> from jordanian import SuiteBuilder
    >>> pipeline = SuiteBuilder().with_suite('ybe').build()
    >>> result = pipeline.run()
"""

from .__version__ import __version__, __author__, __license__, __description__
from .core.builder import SuiteBuilder, create_pipeline

__all__ = [
    '__version__',
    '__author__',
    '__license__',
    '__description__',
    'SuiteBuilder',
    'create_pipeline',
]
