from fractions import Fraction

import pytest
import sympy

from k3hodge import hilb2, hodge, k3, lattice
from k3hodge.checks import sample_configs
from k3hodge.errors import GeneralityRequired, InvalidDegree, NotIntegral
from k3hodge.hilb2 import H2Class


def row(**coeffs):
    r = [0] * 22
    for name, c in coeffs.items():
        r[int(name[1:]) - 1] = c
    return r


def test_closed_form_values():
    assert hodge.generic_gram_closed_form(1) == [[12, 6, 2, -4], [6, 2, 1, -2], [2, 1, 1, -1], [-4, -2, -1, 12]]
    assert abs(sympy.Matrix(hodge.generic_gram_closed_form(1)).det()) == 84
    assert hodge.generic_gram_closed_form(2)[0][0] == 48
    with pytest.raises(InvalidDegree):
        hodge.generic_gram_closed_form(0)


def test_closed_form_discriminant_symbolically():
    t = sympy.symbols("t", positive=True)
    m = sympy.Matrix([[12 * t**2, 6 * t**2, 2 * t, -4 * t], [6 * t**2, t * (3 * t - 1), t, -2 * t],
                      [2 * t, t, 1, -1], [-4 * t, -2 * t, -1, 12]])
    assert sympy.expand(m.det()) == -84 * t**3


@pytest.mark.parametrize("t", range(1, 26))
def test_generic_gram(t):
    cfg = k3.generic_surface(t)
    gram = hodge.gram_matrix(hodge.integral_basis(cfg))
    assert gram == hodge.generic_gram_closed_form(t)
    assert abs(lattice.det(gram)) == 84 * t**3


@pytest.mark.parametrize("t", [1, 3])
def test_generic_report(t):
    rep = hodge.analyze(k3.generic_surface(t))
    assert rep.rank == 4 and rep.discriminant == 84 * t**3 and rep.is_odd
    assert rep.closed_form_match and rep.indivisibility_of_q and rep.is_saturated
    assert rep.ok


def test_half_class_integral_for_any_t():
    for t in range(1, 12):
        h = H2Class(k3.generic_surface(t).embedding[0])
        c = (hilb2.cup(h, h) - hilb2.cup(h, H2Class.delta())) * Fraction(1, 2)
        assert c.is_integral()


@pytest.mark.parametrize("name", list(sample_configs()))
def test_sample_configs(name):
    cfg = sample_configs()[name]
    rep = hodge.analyze(cfg)
    r = cfg.pic_rank
    assert rep.rank == r * (r + 1) // 2 + r + 2
    assert all(c.is_integral() for c in rep.basis)
    assert rep.saturation_divisors == (1,) * rep.rank
    assert abs(rep.nakajima_change_det) == 1
    assert rep.closed_form_match is None and rep.is_odd and rep.ok
    assert rep.discriminant == abs(sympy.Matrix(rep.gram).det())


def test_rational_basis_sizes_and_span():
    for cfg in [k3.generic_surface(2), *sample_configs().values()]:
        rat = hodge.rational_basis(cfg)
        assert len(rat) == hodge.expected_rank(cfg.pic_rank)
        assert lattice.rank([c.coords for c in rat]) == len(rat)
        # every integral basis element is a rational combination of the rational basis
        hodge.change_of_basis(rat, hodge.integral_basis(cfg))


def test_nakajima_change_is_unimodular_via_sympy():
    cfg = sample_configs()["U+<-2>"]
    m = hodge.change_of_basis(hodge.nakajima_integral_basis(cfg), hodge.integral_basis(cfg))
    assert all(x.denominator == 1 for r in m for x in r)
    assert abs(sympy.Matrix(m).det()) == 1


def test_embedding_independence():
    for t in (1, 2, 3):
        a = k3.generic_surface(t)
        b = k3.surface_from_embedding([[2 * t]], [row(a1=1, a17=1, a18=t + 1)])
        assert hodge.analyze(a).gram == hodge.analyze(b).gram
    u1 = sample_configs()["U"]
    u2 = k3.surface_from_embedding([[0, 1], [1, 0]], [row(a19=1), row(a20=1)])
    assert hodge.analyze(u1).gram == hodge.analyze(u2).gram


def _dual_partner(x):
    # integer z with x.z = 1 from the SNF of the row, then y = mu z has (x, y) = 1
    res = lattice.smith_normal_form([x])
    z = [res.left[0][0] * r[0] for r in res.right]
    mu = k3.diagonal_coefficients()
    return [sum(mu[i][j] * z[j] for j in range(22)) for i in range(22)]


def test_transcendental_pairing():
    cfg = k3.generic_surface(2)
    trans = k3.transcendental_basis(cfg)
    d2 = hilb2.delta_squared()
    for x in trans:
        y = _dual_partner(x)
        x_cls, y_cls = H2Class(x), H2Class(y)
        assert hilb2.bbf(x_cls, y_cls) == 1
        assert hilb2.pair(d2, hilb2.cup(x_cls, y_cls)) == -2
    x, y = H2Class.alpha(18), H2Class.alpha(19)
    assert hilb2.pair(d2, hilb2.cup(x, y)) == -2


def test_generality_required():
    cfg = k3.surface_from_embedding([[2]], [row(a17=1, a18=1)], assume_general=False)
    for fn in (hodge.rational_basis, hodge.integral_basis, hodge.analyze):
        with pytest.raises(GeneralityRequired):
            fn(cfg)


def test_gram_rejects_fractional():
    with pytest.raises(NotIntegral):
        hodge.gram_matrix([hilb2.q_dual()])
