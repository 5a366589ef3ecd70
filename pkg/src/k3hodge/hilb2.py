"""Degree 2 and 4 cohomology of the Hilbert square X = S^[2] of a K3 surface.

H^2(X, Z) = H^2(S, Z) + Z delta carries the Beauville-Bogomolov-Fujiki
form, which on the first summand is the intersection form and has
q(delta) = -2.

H^4(X, Q) is modelled in the integral Nakajima basis of Qin and Wang,
with coordinates laid out as::

    0            A     q1(1) q1(x) |0>           (x = point class of S)
    1 .. 22      B_i   q2(alpha_i) |0>
    23 .. 253    C_ij  q1(alpha_i) q1(alpha_j) |0>, i < j, lexicographic
    254 .. 275   D_i   (q1(alpha_i)^2 - q2(alpha_i)) / 2 |0>

A class is integral exactly when all 276 coordinates are integers.
Indices in code are 0-based: alpha_k of the literature is index k - 1.

The intersection pairing on H^4 is evaluated by passing to Sym^2 H^2
(an isomorphism for K3^[2]-type fourfolds) and using
<a1 a2, a3 a4> = (a1,a2)(a3,a4) + (a1,a3)(a2,a4) + (a1,a4)(a2,a3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import gcd
from typing import Iterable, Sequence

from . import lattice
from .errors import InternalInconsistency, NotIntegral
from .k3 import RANK, diagonal_coefficients, k3_lattice

DIM = 276
DELTA = RANK  # index of delta in the 23-element basis of H^2(X)

A_INDEX = 0
_B0 = 1
_C0 = 1 + RANK
_D0 = _C0 + RANK * (RANK - 1) // 2

_C_INDEX = {pair: _C0 + k for k, pair in enumerate(combinations(range(RANK), 2))}
_C_PAIRS = {v: k for k, v in _C_INDEX.items()}
# monomials e_a e_b, a <= b, over (alpha_1..alpha_22, delta)
_SYM_INDEX = {pair: k for k, pair in enumerate(combinations_with_replacement(range(RANK + 1), 2))}
_SYM_PAIRS = {v: k for k, v in _SYM_INDEX.items()}

assert _D0 + RANK == DIM and len(_SYM_INDEX) == DIM


def b_index(i: int) -> int:
    return _B0 + i


def c_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return _C_INDEX[(i, j)]


def d_index(i: int) -> int:
    return _D0 + i


def sym_index(a: int, b: int) -> int:
    if a > b:
        a, b = b, a
    return _SYM_INDEX[(a, b)]


def _fractions(values: Iterable, n: int) -> tuple[Fraction, ...]:
    out = tuple(Fraction(x) for x in values)
    if len(out) != n:
        raise ValueError(f"expected {n} coordinates, got {len(out)}")
    return out


# -- H^2 ---------------------------------------------------------------------

@dataclass(frozen=True)
class H2Class:
    """v . alpha + d delta, with rational coefficients."""

    v: tuple[Fraction, ...]
    d: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "v", _fractions(self.v, RANK))
        object.__setattr__(self, "d", Fraction(self.d))

    @classmethod
    def alpha(cls, i: int) -> "H2Class":
        v = [0] * RANK
        v[i] = 1
        return cls(v)

    @classmethod
    def delta(cls) -> "H2Class":
        return cls([0] * RANK, 1)

    def __add__(self, other: "H2Class") -> "H2Class":
        return H2Class([x + y for x, y in zip(self.v, other.v)], self.d + other.d)

    def __sub__(self, other: "H2Class") -> "H2Class":
        return H2Class([x - y for x, y in zip(self.v, other.v)], self.d - other.d)

    def __mul__(self, k) -> "H2Class":
        return H2Class([k * x for x in self.v], k * self.d)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return self.d.denominator == 1 and all(x.denominator == 1 for x in self.v)


def bbf(x: H2Class, y: H2Class) -> Fraction:
    return Fraction(k3_lattice().b(x.v, y.v)) - 2 * x.d * y.d


@lru_cache(maxsize=None)
def bbf_gram() -> lattice.Matrix:
    """Gram matrix of H^2(X, Z) in the basis alpha_1..alpha_22, delta."""
    return lattice.direct_sum(k3_lattice(), lattice.standard_lattice("rank_one", -2)).gram


# -- H^4 ---------------------------------------------------------------------

@dataclass(frozen=True)
class H4Class:
    """A rational class in H^4(X, Q), in Qin-Wang coordinates."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _fractions(self.coords, DIM))

    @classmethod
    def zero(cls) -> "H4Class":
        return cls([0] * DIM)

    @classmethod
    def basis_vector(cls, index: int) -> "H4Class":
        c = [0] * DIM
        c[index] = 1
        return cls(c)

    @property
    def A(self) -> Fraction:
        return self.coords[A_INDEX]

    def B(self, i: int) -> Fraction:
        return self.coords[b_index(i)]

    def C(self, i: int, j: int) -> Fraction:
        return self.coords[c_index(i, j)]

    def D(self, i: int) -> Fraction:
        return self.coords[d_index(i)]

    def __add__(self, other: "H4Class") -> "H4Class":
        return H4Class([x + y for x, y in zip(self.coords, other.coords)])

    def __sub__(self, other: "H4Class") -> "H4Class":
        return H4Class([x - y for x, y in zip(self.coords, other.coords)])

    def __neg__(self) -> "H4Class":
        return H4Class([-x for x in self.coords])

    def __mul__(self, k) -> "H4Class":
        k = Fraction(k)
        return H4Class([k * x for x in self.coords])

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def integer_coords(self) -> list[int]:
        if not self.is_integral():
            raise NotIntegral("class has non-integral Qin-Wang coordinates")
        return [int(x) for x in self.coords]


def is_integral(c: H4Class) -> bool:
    return c.is_integral()


def divisibility(c: H4Class) -> int:
    """Largest n with c / n still integral (gcd of the coordinates)."""
    coords = c.integer_coords()
    g = 0
    for x in coords:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("divisibility of the zero class is undefined")
    return g


def _add_q1q1(out: list, x: Sequence, y: Sequence, scale=1) -> None:
    # q1(a_k) q1(a_l) is C_kl for k != l, and q1(a_k)^2 = 2 D_k + B_k
    for k, xk in enumerate(x):
        if not xk:
            continue
        for l, yl in enumerate(y):
            if not yl:
                continue
            c = scale * xk * yl
            if k == l:
                out[d_index(k)] += 2 * c
                out[b_index(k)] += c
            else:
                out[c_index(k, l)] += c


def q1q1(x: Sequence, y: Sequence) -> H4Class:
    """q1(x) q1(y)|0> for x, y in H^2(S) given as 22-vectors."""
    out = [Fraction(0)] * DIM
    _add_q1q1(out, x, y)
    return H4Class(out)


def q2(x: Sequence) -> H4Class:
    """q2(x)|0>."""
    out = [Fraction(0)] * DIM
    for k, xk in enumerate(x):
        out[b_index(k)] = Fraction(xk)
    return H4Class(out)


def m11(x: Sequence) -> H4Class:
    """(q1(x)^2 - q2(x))/2 |0>; integral for every integral x."""
    return (q1q1(x, x) - q2(x)) * Fraction(1, 2)


@lru_cache(maxsize=None)
def delta_squared() -> H4Class:
    """delta^2 = -sum_{i<j} mu_ij q1q1 - 1/2 sum_i mu_ii q1(a_i)^2 - q1(1)q1(x).

    This is the corrected sign: with the unshifted pairing on H^*(S) the
    whole right-hand side flips.
    """
    mu = diagonal_coefficients()
    out = [Fraction(0)] * DIM
    out[A_INDEX] = Fraction(-1)
    for (i, j), idx in _C_INDEX.items():
        out[idx] = Fraction(-mu[i][j])
    for i in range(RANK):
        out[d_index(i)] = Fraction(-mu[i][i])
        out[b_index(i)] = Fraction(-mu[i][i], 2)
    return H4Class(out)


def cup(x: H2Class, y: H2Class) -> H4Class:
    """Cup product H^2 x H^2 -> H^4, bilinear in both arguments.

    alpha . beta = (int alpha beta) q1(1)q1(x) + q1(alpha) q1(beta),
    delta . alpha = q2(alpha), delta . delta = delta_squared().
    """
    out = [Fraction(0)] * DIM
    out[A_INDEX] = Fraction(k3_lattice().b(x.v, y.v))
    _add_q1q1(out, x.v, y.v)
    if x.d or y.d:
        for k in range(RANK):
            out[b_index(k)] += x.d * y.v[k] + y.d * x.v[k]
    result = H4Class(out)
    dd = x.d * y.d
    if dd:
        result = result + delta_squared() * dd
    return result


# -- Sym^2 H^2 ---------------------------------------------------------------

@dataclass(frozen=True)
class Sym2Class:
    """Coefficients over the monomials e_a e_b (a <= b) of Sym^2 H^2(X, Q)."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _fractions(self.coords, DIM))

    def coefficient(self, a: int, b: int) -> Fraction:
        return self.coords[sym_index(a, b)]

    def symmetric_matrix(self) -> list[list[Fraction]]:
        """S with sum_{a,b} S_ab e_a e_b equal to this class."""
        n = RANK + 1
        s = [[Fraction(0)] * n for _ in range(n)]
        for (a, b), idx in _SYM_INDEX.items():
            x = self.coords[idx]
            if a == b:
                s[a][a] = x
            else:
                s[a][b] = s[b][a] = x / 2
        return s

    @classmethod
    def from_symmetric_matrix(cls, s: Sequence[Sequence]) -> "Sym2Class":
        out = [Fraction(0)] * DIM
        for (a, b), idx in _SYM_INDEX.items():
            out[idx] = Fraction(s[a][a]) if a == b else Fraction(s[a][b]) + Fraction(s[b][a])
        return cls(out)


@lru_cache(maxsize=None)
def _point_class_sym2() -> tuple[Fraction, ...]:
    # q1(1)q1(x)|0> = (1/10) delta.delta + (1/20) sum_{i,j} mu_ij alpha_i.alpha_j
    mu = diagonal_coefficients()
    out = [Fraction(0)] * DIM
    out[sym_index(DELTA, DELTA)] = Fraction(1, 10)
    for i in range(RANK):
        out[sym_index(i, i)] = Fraction(mu[i][i], 20)
        for j in range(i + 1, RANK):
            out[sym_index(i, j)] = Fraction(mu[i][j], 10)
    return tuple(out)


def to_sym2(c: H4Class) -> Sym2Class:
    g = k3_lattice().gram
    out = [Fraction(0)] * DIM
    a = c.A
    for (i, j), idx in _C_INDEX.items():
        x = c.coords[idx]
        if x:
            out[sym_index(i, j)] += x
            a -= g[i][j] * x
    for i in range(RANK):
        x = c.D(i)
        if x:
            out[sym_index(i, i)] += x / 2
            out[sym_index(i, DELTA)] -= x / 2
            a -= g[i][i] * x / 2
        x = c.B(i)
        if x:
            out[sym_index(i, DELTA)] += x
    if a:
        for idx, p in enumerate(_point_class_sym2()):
            if p:
                out[idx] += a * p
    return Sym2Class(out)


def from_sym2(s: Sym2Class) -> H4Class:
    g = k3_lattice().gram
    out = [Fraction(0)] * DIM
    dd = Fraction(0)
    for idx, x in enumerate(s.coords):
        if not x:
            continue
        a, b = _SYM_PAIRS[idx]
        if b == DELTA:
            if a == DELTA:
                dd = x
            else:
                out[b_index(a)] += x
        elif a == b:
            out[A_INDEX] += g[a][a] * x
            out[d_index(a)] += 2 * x
            out[b_index(a)] += x
        else:
            out[A_INDEX] += g[a][b] * x
            out[c_index(a, b)] += x
    result = H4Class(out)
    if dd:
        result = result + delta_squared() * dd
    return result


def _times_bbf_gram(s: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    g = bbf_gram()
    n = len(g)
    nz = [[(k, g[k][j]) for k in range(n) if g[k][j]] for j in range(n)]
    return [[sum((row[k] * v for k, v in nz[j]), Fraction(0)) for j in range(n)] for row in s]


def pair_sym2(s: Sym2Class, t: Sym2Class) -> Fraction:
    """Intersection pairing on Sym^2 H^2 induced by the BBF form.

    With S, T symmetric and G the BBF Gram matrix this is
    tr(SG) tr(TG) + 2 tr(SG TG).
    """
    sg = _times_bbf_gram(s.symmetric_matrix())
    tg = _times_bbf_gram(t.symmetric_matrix())
    n = len(sg)
    tr_s = sum(sg[i][i] for i in range(n))
    tr_t = sum(tg[i][i] for i in range(n))
    cross = sum(sg[i][j] * tg[j][i] for i in range(n) for j in range(n) if sg[i][j] and tg[j][i])
    return tr_s * tr_t + 2 * cross


def pair(a: H4Class, b: H4Class) -> Fraction:
    return pair_sym2(to_sym2(a), to_sym2(b))


# -- distinguished classes ---------------------------------------------------

def _qdual_scaled() -> H4Class:
    """(2/5) q_X^vee = 9 q1(1)q1(x) + sum_{i<j} mu_ij q1q1 + 1/2 sum_i mu_ii q1(a_i)^2."""
    mu = diagonal_coefficients()
    out = [Fraction(0)] * DIM
    out[A_INDEX] = Fraction(9)
    for (i, j), idx in _C_INDEX.items():
        out[idx] = Fraction(mu[i][j])
    for i in range(RANK):
        out[d_index(i)] = Fraction(mu[i][i])
        out[b_index(i)] = Fraction(mu[i][i], 2)
    return H4Class(out)


@lru_cache(maxsize=None)
def q_dual() -> H4Class:
    """Dual of the BBF form, sum_ij m_ij e_i e_j with (m_ij) = G^-1.

    Computed from the closed Nakajima expression and, separately, from the
    inverse BBF Gram matrix pushed through Sym^2; the two must agree.
    """
    closed = _qdual_scaled() * Fraction(5, 2)
    inv = lattice.inverse(bbf_gram())
    via_sym2 = from_sym2(Sym2Class.from_symmetric_matrix(inv))
    if closed != via_sym2:
        raise InternalInconsistency("q_dual: closed form and inverse-Gram route disagree")
    return closed


@lru_cache(maxsize=None)
def c2() -> H4Class:
    """Second Chern class of S^[2]: 27 q1(1)q1(x) + 3 sum_{i<j} mu_ij q1q1 + 3/2 sum_i mu_ii q1(a_i)^2."""
    mu = diagonal_coefficients()
    out = [Fraction(0)] * DIM
    out[A_INDEX] = Fraction(27)
    for (i, j), idx in _C_INDEX.items():
        out[idx] = Fraction(3 * mu[i][j])
    for i in range(RANK):
        out[d_index(i)] = Fraction(3 * mu[i][i])
        out[b_index(i)] = Fraction(3 * mu[i][i], 2)
    result = H4Class(out)
    if result != q_dual() * Fraction(6, 5):
        raise InternalInconsistency("c2 differs from (6/5) q_dual")
    return result


@lru_cache(maxsize=None)
def point_class() -> H4Class:
    """q1(1)q1(x)|0>, which equals (delta^2 + (2/5) q_dual) / 8."""
    direct = H4Class.basis_vector(A_INDEX)
    derived = (delta_squared() + q_dual() * Fraction(2, 5)) * Fraction(1, 8)
    if direct != derived:
        raise InternalInconsistency("point class: (delta^2 + 2/5 q_dual)/8 is not q1(1)q1(x)")
    return direct


NAMED_CLASSES = {
    "delta2": delta_squared,
    "qdual": q_dual,
    "c2": c2,
    "point": point_class,
}
