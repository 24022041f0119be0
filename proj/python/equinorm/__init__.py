"""Exact parameterization of pairs of vectors with equal sums of squares.

Rational values are returned as ``fractions.Fraction``; inputs may be ints,
Fractions or ``"p/q"`` strings. Pivot axes are one-based.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
