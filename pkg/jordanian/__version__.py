"""
Jordanian Version Information
"""

__version__ = "0.3.0"
__author__ = "Jordanian contributors"
__license__ = "MIT"
__description__ = "Exact verification of the coloured Jordanian quantum group GL_{h,s}(2)"
