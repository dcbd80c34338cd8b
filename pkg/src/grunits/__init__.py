"""Exact-arithmetic toolkit for p-subgroups of units in rational group
algebras of PSL(2,p^2) and PSL(3,3)."""

__version__ = "0.1.0"
