"""
Jordanian Utilities Module
==========================

Utility functions and classes:
- logging: Current and archive log files
- serialization: JSON, LaTeX and plain renderings
"""

from .logging import JordanianLogger, setup_logging

__all__ = [
    'JordanianLogger',
    'setup_logging',
]
