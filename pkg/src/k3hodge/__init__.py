"""Exact computation of the integral (2,2) Hodge lattice of the Hilbert square of a K3 surface."""

from .errors import (
    DegenerateLattice,
    GeneralityRequired,
    GramMismatch,
    HodgeError,
    InternalInconsistency,
    InvalidDegree,
    NotIntegral,
    NotPrimitive,
    RankOutOfRange,
    WrongSignature,
)
from .hilb2 import H2Class, H4Class, Sym2Class, bbf, c2, cup, delta_squared, pair, point_class, q_dual
from .hodge import Hodge22Report, analyze, gram_matrix, integral_basis
from .k3 import K3Config, diagonal_coefficients, generic_surface, surface_from_embedding
from .lattice import IntLattice

__all__ = [
    "DegenerateLattice", "GeneralityRequired", "GramMismatch", "HodgeError", "InternalInconsistency",
    "InvalidDegree", "NotIntegral", "NotPrimitive", "RankOutOfRange", "WrongSignature",
    "H2Class", "H4Class", "Sym2Class", "bbf", "c2", "cup", "delta_squared", "pair", "point_class", "q_dual",
    "Hodge22Report", "analyze", "gram_matrix", "integral_basis",
    "K3Config", "diagonal_coefficients", "generic_surface", "surface_from_embedding",
    "IntLattice",
]
