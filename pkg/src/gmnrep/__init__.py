"""Exact construction and verification of the irreducible representations of G(m,1,n)."""

__version__ = "0.1.0"

from .cyclo import CycRat, Rational, root_of_unity  # noqa: F401
