"""
Jordanian CLI
=============

Command-line interface for emitting constructions and verifying identities.
"""

from .main import cli

__all__ = ['cli']
