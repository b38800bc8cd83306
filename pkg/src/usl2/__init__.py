"""Exact universal sl2 invariants of bottom tangles and colored Jones polynomials."""

__version__ = "0.1.0"
