"""Exact computational engine for cubic Hecke algebras on 2 to 5 strands.

The algebra A_n is the quotient of the braid group algebra R B_n,
R = Z[a, b, c, c^-1], by the cubic relation s_i^3 = a s_i^2 + b s_i + c.
This package constructs the canonical linear bases (ranks 3, 24, 648,
155520), reduces arbitrary braid words to normal form, multiplies in
normal form, and machine-checks the structural claims the construction
rests on.
"""

__version__ = "0.1.0"

from cubichecke.catalog import basis_words, get_catalog
from cubichecke.coeffs import LaurentCoeff, SpecPoint
from cubichecke.engine import Engine, IrreducibleWord, default_engine, reduce_word
from cubichecke.tables import (
    AlgebraElement,
    build_action_table,
    fold_word,
    include,
    multiply,
    phi,
    psi,
    reduce_element,
    tables,
)

__all__ = [
    "AlgebraElement",
    "Engine",
    "IrreducibleWord",
    "LaurentCoeff",
    "SpecPoint",
    "__version__",
    "basis_words",
    "build_action_table",
    "default_engine",
    "fold_word",
    "get_catalog",
    "include",
    "multiply",
    "phi",
    "psi",
    "reduce_element",
    "reduce_word",
    "tables",
]
