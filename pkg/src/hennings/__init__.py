"""Exact computation of the Hennings and WRT SU(2) invariants for the
restricted quantum sl2 at a root of unity."""

__version__ = "0.1.0"
