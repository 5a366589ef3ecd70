import pytest
import sympy

from k3hodge import k3, lattice
from k3hodge.errors import GramMismatch, InvalidDegree, NotPrimitive, RankOutOfRange, WrongSignature
from k3hodge.golden import MU_PUBLISHED


def row(**coeffs):
    r = [0] * 22
    for name, c in coeffs.items():
        r[int(name[1:]) - 1] = c
    return r


class TestDiagonalCoefficients:
    def test_published_entries(self):
        mu = k3.diagonal_coefficients()
        assert mu[0][0] == -4 and mu[0][1] == -7
        assert mu[16][17] == mu[18][19] == mu[20][21] == 1
        assert mu[1][2] == -20

    def test_matches_sympy_inverse(self):
        g = sympy.Matrix(k3.k3_lattice().gram)
        assert sympy.Matrix(k3.diagonal_coefficients()) == g.inv()

    def test_full_table(self):
        mu = k3.diagonal_coefficients()
        for i in range(22):
            for j in range(i, 22):
                assert mu[i][j] == MU_PUBLISHED.get((i + 1, j + 1), 0)

    def test_symmetric_even_diagonal(self):
        mu = k3.diagonal_coefficients()
        assert all(mu[i][j] == mu[j][i] for i in range(22) for j in range(22))
        assert all(mu[i][i] % 2 == 0 for i in range(22))

    def test_defining_equation(self):
        g = k3.k3_lattice().gram
        mu = k3.diagonal_coefficients()
        assert lattice.matmul(lattice.matmul(g, mu), g) == [list(r) for r in g]


class TestGenericSurface:
    @pytest.mark.parametrize("t", [1, 2, 7])
    def test_embedding(self, t):
        cfg = k3.generic_surface(t)
        assert cfg.pic_gram == ((2 * t,),)
        assert cfg.embedding[0] == tuple(row(a17=1, a18=t))
        assert cfg.polarization_t == t and cfg.assume_general

    @pytest.mark.parametrize("t", [0, -3, True, 1.5])
    def test_bad_degree(self, t):
        with pytest.raises(InvalidDegree):
            k3.generic_surface(t)


class TestValidation:
    def test_accepts_degree_two(self):
        assert k3.surface_from_embedding([[2]], [row(a17=1, a18=1)]) == k3.generic_surface(1)

    def test_gram_mismatch(self):
        with pytest.raises(GramMismatch):
            k3.surface_from_embedding([[2]], [row(a17=2, a18=1)])

    def test_not_primitive(self):
        with pytest.raises(NotPrimitive):
            k3.surface_from_embedding([[8]], [row(a17=2, a18=2)])

    def test_not_primitive_rank_two(self):
        # rows span an index-2 sublattice
        with pytest.raises(NotPrimitive):
            k3.surface_from_embedding([[2, 0], [0, -2]], [row(a17=1, a18=1), row(a17=1, a18=-1)])

    def test_rank_range(self):
        with pytest.raises(RankOutOfRange):
            k3.surface_from_embedding([], [])
        with pytest.raises(RankOutOfRange):
            k3.surface_from_embedding([[2]], [[1, 1]])

    def test_wrong_signature(self):
        with pytest.raises(WrongSignature):
            k3.surface_from_embedding([[-2]], [row(a1=1)])
        with pytest.raises(WrongSignature):
            k3.surface_from_embedding([[2, 0], [0, 2]], [row(a17=1, a18=1), row(a19=1, a20=1)])

    def test_degenerate(self):
        with pytest.raises(WrongSignature):
            k3.surface_from_embedding([[0]], [row(a17=1)])


class TestTranscendental:
    def test_degree_four(self):
        cfg = k3.generic_surface(2)
        trans = k3.transcendental_basis(cfg)
        assert len(trans) == 21
        g = k3.k3_lattice()
        assert all(g.b(v, cfg.embedding[0]) == 0 for v in trans)
        assert lattice.is_primitive(trans)
        assert lattice.rank(trans + [row(a19=1)]) == 21

    def test_rank_three(self):
        cfg = k3.surface_from_embedding([[0, 1, 0], [1, 0, 0], [0, 0, -2]],
                                         [row(a17=1), row(a18=1), row(a1=1)])
        assert len(k3.transcendental_basis(cfg)) == 19
