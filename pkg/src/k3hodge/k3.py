"""The input surface: its Picard lattice inside the fixed K3 lattice."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import lattice
from .errors import GramMismatch, InvalidDegree, NotPrimitive, RankOutOfRange, WrongSignature
from .lattice import IntLattice, Matrix

RANK = 22
MAX_PICARD_RANK = 19


@lru_cache(maxsize=None)
def k3_lattice() -> IntLattice:
    return lattice.standard_lattice("k3")


@lru_cache(maxsize=None)
def diagonal_coefficients() -> Matrix:
    """The 22x22 matrix mu of the diagonal class in H^2(S) (x) H^2(S).

    It is the unique solution of sum_ij mu_ij G_ik G_jl = G_kl, which is
    the inverse Gram matrix of the K3 lattice.  Unimodularity makes it
    integral; the result is cached and shared read-only.
    """
    inv = lattice.inverse_gram(k3_lattice())
    mu = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise AssertionError("inverse of a unimodular Gram matrix must be integral")
        mu.append(tuple(int(x) for x in row))
    return tuple(mu)


@dataclass(frozen=True)
class K3Config:
    """Picard lattice of S, its embedding into the K3 lattice, and the generality flag.

    ``embedding`` rows are the coordinates of b_1..b_r in the basis
    alpha_1..alpha_22.  Build instances through :func:`surface_from_embedding`
    or :func:`generic_surface`, which validate them.
    """

    pic_gram: Matrix
    embedding: Matrix
    assume_general: bool = True

    @property
    def pic_rank(self) -> int:
        return len(self.pic_gram)

    @property
    def polarization_t(self) -> int | None:
        """t with Pic(S) = <2t>, for Picard rank one; otherwise None."""
        if self.pic_rank == 1 and self.pic_gram[0][0] > 0:
            return self.pic_gram[0][0] // 2
        return None


def surface_from_embedding(pic_gram: Sequence[Sequence[int]],
                           embedding: Sequence[Sequence[int]],
                           assume_general: bool = True) -> K3Config:
    pic = lattice.freeze(pic_gram)
    emb = lattice.freeze(embedding)
    r = len(pic)
    if not 1 <= r <= MAX_PICARD_RANK:
        raise RankOutOfRange(f"Picard rank must be between 1 and {MAX_PICARD_RANK}, got {r}")
    if any(len(row) != r for row in pic):
        raise RankOutOfRange("pic_gram must be square")
    if len(emb) != r or any(len(row) != RANK for row in emb):
        raise RankOutOfRange(f"embedding must be {r}x{RANK}")
    try:
        pic_lattice = IntLattice(pic)
    except ValueError as exc:
        raise GramMismatch(str(exc)) from None

    g = k3_lattice()
    actual = lattice.matmul(lattice.matmul(emb, g.gram), lattice.transpose(emb))
    if lattice.freeze(actual) != pic:
        raise GramMismatch(f"embedding induces Gram matrix {actual}, expected {[list(x) for x in pic]}")
    divisors = lattice.elementary_divisors(emb)
    if len(divisors) != r or any(d != 1 for d in divisors):
        raise NotPrimitive(f"embedding is not primitive (elementary divisors {list(divisors)})")
    if lattice.det(pic) == 0:
        raise WrongSignature("Picard lattice is degenerate")
    sig = lattice.signature(pic_lattice)
    if sig != (1, r - 1):
        raise WrongSignature(f"Picard lattice has signature {sig}, expected (1, {r - 1})")
    return K3Config(pic, emb, bool(assume_general))


def generic_surface(t: int) -> K3Config:
    """Generic K3 of degree 2t: Pic = Z h with h = alpha_17 + t alpha_18."""
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidDegree(f"degree parameter t must be a positive integer, got {t!r}")
    row = [0] * RANK
    row[16] = 1
    row[17] = t
    return surface_from_embedding([[2 * t]], [row], assume_general=True)


def transcendental_basis(cfg: K3Config) -> list[list[int]]:
    """Saturated basis of Pic(S)^perp in the K3 lattice, rank 22 - r."""
    return lattice.orthogonal_complement(k3_lattice(), cfg.embedding)
