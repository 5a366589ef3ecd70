"""Exact integral lattices and the integer linear algebra underneath them.

Matrices are plain row-major sequences of Python ints (or Fractions where a
rational result is unavoidable).  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import DegenerateLattice

Matrix = tuple[tuple[int, ...], ...]


def freeze(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in m)


@dataclass(frozen=True)
class IntLattice:
    """A free Z-module of finite rank with a symmetric integer Gram matrix."""

    gram: Matrix

    def __post_init__(self):
        g = freeze(self.gram)
        n = len(g)
        for i, row in enumerate(g):
            if len(row) != n:
                raise ValueError(f"Gram matrix is not square (row {i} has length {len(row)})")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def b(self, x: Sequence, y: Sequence):
        """Bilinear form on coordinate vectors (ints or Fractions)."""
        g = self.gram
        total = 0
        for i, xi in enumerate(x):
            if xi:
                row = g[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
        return total


@dataclass(frozen=True)
class SnfResult:
    """left * m * right == diag(diag) padded with zeros; left and right unimodular."""

    diag: tuple[int, ...]
    left: Matrix
    right: Matrix


# -- standard lattices -------------------------------------------------------

_U = ((0, 1), (1, 0))


def _e8_minus() -> Matrix:
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = -2
    for i in range(6):
        g[i][i + 1] = g[i + 1][i] = 1
    # the branch node hangs off the third vertex of the A7 chain
    g[2][7] = g[7][2] = 1
    return freeze(g)


def standard_lattice(kind: str, k: int | None = None) -> IntLattice:
    """Return one of the named lattices.

    ``kind`` is ``"hyperbolic_U"``, ``"e8_minus"``, ``"rank_one"`` (needs
    ``k``, giving <k>) or ``"k3"``.  The K3 lattice is ordered as two
    E8(-1) blocks (indices 0-7, 8-15) followed by three copies of U
    (16-17, 18-19, 20-21).
    """
    if kind == "hyperbolic_U":
        return IntLattice(_U)
    if kind == "e8_minus":
        return IntLattice(_e8_minus())
    if kind == "rank_one":
        if k is None:
            raise ValueError("rank_one lattice needs k")
        return IntLattice(((int(k),),))
    if kind == "k3":
        e8 = IntLattice(_e8_minus())
        u = IntLattice(_U)
        return direct_sum(e8, e8, u, u, u)
    raise ValueError(f"unknown lattice kind {kind!r}")


def direct_sum(*lattices: IntLattice) -> IntLattice:
    n = sum(l.rank for l in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in lattices:
        for i, row in enumerate(l.gram):
            g[off + i][off:off + l.rank] = row
        off += l.rank
    return IntLattice(freeze(g))


# -- determinants, inverses, signature ---------------------------------------

def det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def determinant(l: IntLattice) -> int:
    return det(l.gram)


def discriminant(l: IntLattice) -> int:
    return abs(det(l.gram))


def is_even(l: IntLattice) -> bool:
    return all(l.gram[i][i] % 2 == 0 for i in range(l.rank))


def is_unimodular(l: IntLattice) -> bool:
    return discriminant(l) == 1


def signature(l: IntLattice) -> tuple[int, int]:
    """(positive, negative) inertia, by symmetric congruence over Q."""
    if det(l.gram) == 0:
        raise DegenerateLattice("signature of a degenerate lattice is undefined")
    a = [[Fraction(x) for x in row] for row in l.gram]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for row in a:
                    row[k], row[swap] = row[swap], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise DegenerateLattice("zero row met during diagonalization")
                # e_k -> e_k + e_j turns the pivot into 2*a[k][j] since a[j][j] == 0
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                for r in range(k, n):
                    a[r][i] -= f * a[r][k]
    return pos, neg


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise DegenerateLattice("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def inverse_gram(l: IntLattice) -> list[list[Fraction]]:
    return inverse(l.gram)


# -- small matrix helpers ----------------------------------------------------

def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def coordinates_in(basis: Sequence[Sequence], targets: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve X * basis = targets over Q.

    ``basis`` rows must be linearly independent.  Raises ValueError when a
    target is outside their rational span.
    """
    k = len(basis)
    # reduce [basis | I] so each echelon row remembers its combination of basis rows
    aug = [list(row) + [int(i == j) for j in range(k)] for i, row in enumerate(basis)]
    n = len(basis[0]) if k else 0
    ech, pivots = row_echelon(aug)
    if len([p for p in pivots if p < n]) != k:
        raise ValueError("basis rows are linearly dependent")
    out = []
    for t in targets:
        residual = [Fraction(x) for x in t]
        combo = [Fraction(0)] * k
        for row, p in zip(ech, pivots):
            f = residual[p]
            if f:
                for j in range(n):
                    residual[j] -= f * row[j]
                for j in range(k):
                    combo[j] += f * row[n + j]
        if any(residual):
            raise ValueError("target vector is not in the span of the basis")
        out.append(combo)
    return out


# -- Smith and Hermite normal forms -----------------------------------------

def _snf(m: Sequence[Sequence[int]], want_right_inverse: bool = False):
    a = [list(map(int, row)) for row in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    left = identity(nr)
    right = identity(nc)
    rinv = identity(nc) if want_right_inverse else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]
        if rinv is not None:
            rinv[i], rinv[j] = rinv[j], rinv[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + q * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] += q * row[src]
        for row in right:
            row[dst] += q * row[src]
        if rinv is not None:
            rinv[src] = [x - q * y for x, y in zip(rinv[src], rinv[dst])]

    diag = []
    for s in range(min(nr, nc)):
        while True:
            best = None
            for i in range(s, nr):
                row = a[i]
                for j in range(s, nc):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                return diag, left, right, rinv
            _, i, j = best
            if i != s:
                swap_rows(s, i)
            if j != s:
                swap_cols(s, j)
            p = a[s][s]
            for i in range(s + 1, nr):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // p))
            for j in range(s + 1, nc):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // p))
            if any(a[i][s] for i in range(s + 1, nr)) or any(a[s][j] for j in range(s + 1, nc)):
                continue
            bad = next((i for i in range(s + 1, nr)
                        if any(a[i][j] % p for j in range(s + 1, nc))), None)
            if bad is not None:
                add_row(s, bad, 1)
                continue
            break
        if a[s][s] < 0:
            a[s] = [-x for x in a[s]]
            left[s] = [-x for x in left[s]]
        diag.append(a[s][s])
    return diag, left, right, rinv


def smith_normal_form(m: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with unimodular transforms.

    Pivot choice is the smallest nonzero absolute value, first in row-major
    scan order, so the output is a deterministic function of the input.
    ``diag`` lists only the nonzero elementary divisors.
    """
    diag, left, right, _ = _snf(m)
    return SnfResult(tuple(diag), freeze(left), freeze(right))


def elementary_divisors(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(_snf(m)[0])


def hermite_normal_form(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF of the row lattice; zero rows are dropped."""
    a = [list(map(int, row)) for row in m]
    if not a:
        return []
    nc = len(a[0])
    r = 0
    for c in range(nc):
        rows = [i for i in range(r, len(a)) if a[i][c]]
        if not rows:
            continue
        # gcd-combine everything below r into row r
        for i in rows:
            if i == r:
                continue
            x, y = a[r][c], a[i][c]
            if x == 0:
                a[r], a[i] = a[i], a[r]
                continue
            g, u, v = _xgcd(x, y)
            ri, rr = a[i], a[r]
            a[r] = [u * p + v * q for p, q in zip(rr, ri)]
            a[i] = [(x // g) * q - (y // g) * p for p, q in zip(rr, ri)]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        p = a[r][c]
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return [row for row in a[:r]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, u, v with u*a + v*b == g == gcd(a, b) > 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


# -- saturation and complements ---------------------------------------------

def saturate(generators: Sequence[Sequence[int]]) -> list[list[int]]:
    """HNF basis of (Q-span of the rows) intersected with Z^n."""
    if not generators:
        return []
    diag, _, _, rinv = _snf(generators, want_right_inverse=True)
    return hermite_normal_form(rinv[:len(diag)])


def is_primitive(generators: Sequence[Sequence[int]]) -> bool:
    """True when the rows span a saturated sublattice of Z^n."""
    return all(d == 1 for d in elementary_divisors(generators))


def kernel(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Saturated integer basis (as rows) of {v : m v = 0}."""
    if not m:
        if ncols is None:
            raise ValueError("ncols is required for an empty matrix")
        return identity(ncols)
    diag, _, right, _ = _snf(m)
    cols = transpose(right)
    return hermite_normal_form(cols[len(diag):])


def orthogonal_complement(l: IntLattice, sub: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of {v in Z^n : b(v, s) = 0 for every row s of sub}."""
    if not sub:
        return identity(l.rank)
    return kernel(matmul(sub, l.gram), l.rank)
