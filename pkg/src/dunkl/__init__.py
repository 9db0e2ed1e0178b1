"""Exact-arithmetic toolkit for rational Cherednik algebra structures:
Dunkl operators, quasi-invariant rings, Chalykh-Veselov and shift
operators, and symmetric-group trace tables.
"""

__version__ = "0.1.0"
