"""Rational and integral Hodge classes of type (2,2) on S^[2].

For a K3 surface S general in its Picard rank r (transcendental
endomorphisms are just Q), H^{2,2}(S^[2], Q) has dimension
r(r+1)/2 + r + 2 and the lattice H^{2,2}(S^[2], Z) has the basis

    b_i b_j (i <= j),  (b_i^2 - b_i delta)/2,  (delta^2 + 2/5 q_dual)/8,  delta^2

where b_1..b_r is a basis of Pic(S).  Everything here is built from the
classes of :mod:`k3hodge.hilb2` and checked by exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import gcd
from typing import Sequence

from . import hilb2, lattice
from .errors import GeneralityRequired, InvalidDegree, NotIntegral
from .hilb2 import H2Class, H4Class
from .k3 import K3Config

ASSUMPTION = "valid under the generality assumption (transcendental endomorphisms = Q)"


def expected_rank(r: int) -> int:
    return r * (r + 1) // 2 + r + 2


def _require_general(cfg: K3Config) -> None:
    if not cfg.assume_general:
        raise GeneralityRequired(
            "H^{2,2} bases are only known for K3 surfaces general in their rank; "
            "set assume_general to true to accept that hypothesis")


def _picard_h2(cfg: K3Config) -> list[H2Class]:
    return [H2Class(row) for row in cfg.embedding]


def rational_basis(cfg: K3Config) -> list[H4Class]:
    """Q-basis in Nakajima form.

    Order: q2(b_i)/2, q1(1)q1(x), q1(b_i)^2/2, q1(b_i)q1(b_j) for i < j,
    then delta^2.
    """
    _require_general(cfg)
    b = cfg.embedding
    half = Fraction(1, 2)
    out = [hilb2.q2(bi) * half for bi in b]
    out.append(hilb2.point_class())
    out += [hilb2.q1q1(bi, bi) * half for bi in b]
    out += [hilb2.q1q1(b[i], b[j]) for i, j in combinations(range(len(b)), 2)]
    out.append(hilb2.delta_squared())
    return out


def nakajima_integral_basis(cfg: K3Config) -> list[H4Class]:
    """Z-basis in Nakajima form: q2(b_i), q1(1)q1(x), m11(b_i), q1(b_i)q1(b_j) (i<j), delta^2."""
    _require_general(cfg)
    b = cfg.embedding
    out = [hilb2.q2(bi) for bi in b]
    out.append(hilb2.point_class())
    out += [hilb2.m11(bi) for bi in b]
    out += [hilb2.q1q1(b[i], b[j]) for i, j in combinations(range(len(b)), 2)]
    out.append(hilb2.delta_squared())
    return out


def integral_basis(cfg: K3Config) -> list[H4Class]:
    """Z-basis as cup products: b_i b_j, (b_i^2 - b_i delta)/2, point class, delta^2."""
    _require_general(cfg)
    b = _picard_h2(cfg)
    delta = H2Class.delta()
    half = Fraction(1, 2)
    out = [hilb2.cup(b[i], b[j]) for i, j in combinations_with_replacement(range(len(b)), 2)]
    out += [(hilb2.cup(bi, bi) - hilb2.cup(bi, delta)) * half for bi in b]
    out.append(hilb2.point_class())
    out.append(hilb2.delta_squared())
    for c in out:
        if not c.is_integral():
            raise NotIntegral("integral basis element has fractional coordinates")
    return out


def gram_matrix(basis: Sequence[H4Class]) -> list[list[int]]:
    for c in basis:
        if not c.is_integral():
            raise NotIntegral("Gram matrix requested for a non-integral class")
    sym = [hilb2.to_sym2(c) for c in basis]
    n = len(sym)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = hilb2.pair_sym2(sym[i], sym[j])
            if v.denominator != 1:
                raise NotIntegral(f"pairing of integral classes is {v}")
            g[i][j] = g[j][i] = int(v)
    return g


def generic_gram_closed_form(t: int) -> list[list[int]]:
    """Gram matrix of h^2, (h^2 - h delta)/2, point class, delta^2 for Pic = <2t>."""
    if isinstance(t, bool) or not isinstance(t, int) or t < 1:
        raise InvalidDegree(f"degree parameter t must be a positive integer, got {t!r}")
    return [
        [12 * t * t, 6 * t * t, 2 * t, -4 * t],
        [6 * t * t, t * (3 * t - 1), t, -2 * t],
        [2 * t, t, 1, -1],
        [-4 * t, -2 * t, -1, 12],
    ]


def coordinate_matrix(basis: Sequence[H4Class]) -> list[list[int]]:
    return [c.integer_coords() for c in basis]


def change_of_basis(source: Sequence[H4Class], target: Sequence[H4Class]) -> list[list[Fraction]]:
    """Matrix M with target[i] = sum_j M[i][j] source[j]."""
    return lattice.coordinates_in([c.coords for c in source], [c.coords for c in target])


@dataclass(frozen=True)
class Hodge22Report:
    pic_rank: int
    rank: int
    basis: tuple[H4Class, ...] = field(repr=False)
    gram: tuple[tuple[int, ...], ...]
    determinant: int
    discriminant: int
    is_odd: bool
    indivisibility_of_q: bool
    saturation_divisors: tuple[int, ...]
    nakajima_change_det: int
    rational_span_match: bool
    closed_form_match: bool | None = None
    assumption: str = ASSUMPTION

    @property
    def is_saturated(self) -> bool:
        return len(self.saturation_divisors) == self.rank and all(d == 1 for d in self.saturation_divisors)

    @property
    def ok(self) -> bool:
        return (self.rank == expected_rank(self.pic_rank) and self.is_saturated
                and self.is_odd and self.indivisibility_of_q
                and abs(self.nakajima_change_det) == 1 and self.rational_span_match
                and self.closed_form_match is not False)


def _integer_det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    # clear denominators, take the integer determinant, and rescale
    n = len(m)
    den = 1
    for row in m:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    scaled = [[int(x * den) for x in row] for row in m]
    return Fraction(lattice.det(scaled), den ** n)


def analyze(cfg: K3Config) -> Hodge22Report:
    """Build the integral basis for ``cfg`` and certify it."""
    _require_general(cfg)
    basis = integral_basis(cfg)
    gram = gram_matrix(basis)
    d = lattice.det(gram)
    coords = coordinate_matrix(basis)
    divisors = lattice.elementary_divisors(coords)

    naka = nakajima_integral_basis(cfg)
    change_det = _integer_det(change_of_basis(naka, basis))
    if change_det.denominator != 1:
        raise AssertionError(f"change of basis has non-integral determinant {change_det}")

    rat = rational_basis(cfg)
    rat_coords = [c.coords for c in rat]
    span_rank = lattice.rank(rat_coords + [c.coords for c in basis])
    span_match = span_rank == len(rat) == len(basis) == lattice.rank(rat_coords)

    indivisible = hilb2.divisibility(hilb2.q_dual() * Fraction(2, 5)) == 1

    closed = None
    t = cfg.polarization_t
    if t is not None:
        closed = gram == generic_gram_closed_form(t)

    return Hodge22Report(
        pic_rank=cfg.pic_rank,
        rank=len(basis),
        basis=tuple(basis),
        gram=tuple(tuple(row) for row in gram),
        determinant=d,
        discriminant=abs(d),
        is_odd=any(gram[i][i] % 2 for i in range(len(gram))),
        indivisibility_of_q=indivisible,
        saturation_divisors=tuple(divisors),
        nakajima_change_det=int(change_det),
        rational_span_match=span_match,
        closed_form_match=closed,
    )
