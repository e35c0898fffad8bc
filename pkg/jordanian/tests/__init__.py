"""
Jordanian Tests
===============

Tests for the Jordanian verification library
"""
