"""Exact computational laboratory for three families of quadratic-variable
algebras at finite rank: partition/character arithmetic, a rewriting poset on
finite matchings, equivariant ideals with their initial data, and Koszul
homology tables.

All arithmetic is exact (integers and fractions.Fraction); nothing here is
floating point.
"""

__version__ = "0.1.0"
