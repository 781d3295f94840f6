"""Fox calculus, Alexander polynomials and Reidemeister torsion.

Polynomials and field elements cross the boundary as text in the same
syntax the command-line tool prints and reads.
"""

from fractions import Fraction

from ._abtor import (
    AbtorError,
    alexander,
    alexander_norm,
    chain_torsion,
    fiber_norm,
    fox_derivative,
    franz_zero_check,
    lens_homeomorphic,
    lens_homotopy_equivalent,
    lens_torsion,
    mapping_torus_torsion,
    run_cli,
    span,
    verify_turaev_linking,
)
from . import _abtor


def alexander_polynomial(presentation: str) -> str:
    return alexander(presentation)["polynomial"]


def maximal_torsion(p: int, q: int) -> list[Fraction]:
    """Coefficients of T^0..T^(p-1), normalized up to +-T^u."""
    return [Fraction(c) for c in _abtor.maximal_torsion(p, q)]


def linking_self(p: int, q: int) -> tuple[Fraction, Fraction]:
    """lambda(T, T) and its negative, both reduced to [0, 1)."""
    a, b = _abtor.linking_self(p, q)
    return Fraction(a), Fraction(b)


__all__ = [
    "AbtorError",
    "alexander",
    "alexander_norm",
    "alexander_polynomial",
    "chain_torsion",
    "fiber_norm",
    "fox_derivative",
    "franz_zero_check",
    "lens_homeomorphic",
    "lens_homotopy_equivalent",
    "lens_torsion",
    "linking_self",
    "mapping_torus_torsion",
    "maximal_torsion",
    "run_cli",
    "span",
    "verify_turaev_linking",
]
