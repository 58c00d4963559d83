"""Exact-arithmetic computations with finite-dimensional bound quiver algebras.

The package provides quivers with admissible relations, their quotient path
algebras with computed bases and multiplication tables, right modules as quiver
representations, homological invariants (projective presentations, projective
and global dimension, the Nakayama functor and the translate built from it),
algebra constructions (one-point extensions and coextensions, sink reflections,
branch rooting, trivial extensions, repetitive-algebra windows), tilting-module
certification with the induced Hom functor, add(M)-approximations with
certified short exact sequences, and an upper bound for the representation
dimension obtained as the global dimension of the endomorphism algebra of a
generator-cogenerator.  All arithmetic is exact: rationals or prime fields.
"""

from quiveralg.fields import FieldSpec
from quiveralg.matrix import Mat

__all__ = ["FieldSpec", "Mat"]

__version__ = "0.1.0"
