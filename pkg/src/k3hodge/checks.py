"""Self-verification suite run by ``k3hodge verify`` and the acceptance tests.

Every check is exact.  Randomized checks draw from a seeded generator so a
run is reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import hilb2, hodge, k3, lattice
from .golden import MU_PUBLISHED
from .hilb2 import H2Class, H4Class, Sym2Class
from .k3 import K3Config

SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def _unit(i: int) -> list[int]:
    row = [0] * k3.RANK
    row[i] = 1
    return row


def _combo(**coeffs: int) -> list[int]:
    # _combo(a17=1, a18=2) -> alpha_17 + 2 alpha_18 (1-based names)
    row = [0] * k3.RANK
    for name, c in coeffs.items():
        row[int(name[1:]) - 1] += c
    return row


def sample_configs() -> dict[str, K3Config]:
    """Hand-built primitive Picard lattices of rank 2 and 3."""
    mk = k3.surface_from_embedding
    return {
        "U": mk([[0, 1], [1, 0]], [_combo(a17=1), _combo(a18=1)]),
        "<2>+<-2>": mk([[2, 0], [0, -2]], [_combo(a17=1, a18=1), _combo(a19=1, a20=-1)]),
        "U+<-2>": mk([[0, 1, 0], [1, 0, 0], [0, 0, -2]],
                     [_combo(a17=1), _combo(a18=1), _combo(a1=1)]),
        "<2>+<-2>+<-4>": mk([[2, 0, 0], [0, -2, 0], [0, 0, -4]],
                            [_combo(a17=1, a18=1), _combo(a19=1, a20=-1), _combo(a21=1, a22=-2)]),
    }


@lru_cache(maxsize=None)
def _generic_report(t: int) -> hodge.Hodge22Report:
    return hodge.analyze(k3.generic_surface(t))


def _random_h2(rng: random.Random, bound: int = 5) -> H2Class:
    return H2Class([rng.randint(-bound, bound) for _ in range(k3.RANK)], rng.randint(-bound, bound))


def check_mu_table() -> CheckResult:
    mu = k3.diagonal_coefficients()
    bad = []
    for i in range(k3.RANK):
        for j in range(i, k3.RANK):
            want = MU_PUBLISHED.get((i + 1, j + 1), 0)
            if mu[i][j] != want:
                bad.append(f"mu[{i + 1},{j + 1}]={mu[i][j]} expected {want}")
    symmetric = all(mu[i][j] == mu[j][i] for i in range(k3.RANK) for j in range(k3.RANK))
    passed = not bad and symmetric
    detail = (f"{len(MU_PUBLISHED)} listed nonzero entries and all other upper-triangle zeros match"
              if passed else "; ".join(bad[:5]) or "matrix not symmetric")
    return CheckResult("diagonal coefficients match the published mu table", passed, detail)


def check_qdual_identities(cases: int = 100) -> CheckResult:
    q = hilb2.q_dual()
    self_pair = hilb2.pair(q, q)
    rng = random.Random(SEED)
    failures = 0
    for _ in range(cases):
        x, y = _random_h2(rng), _random_h2(rng)
        if hilb2.pair(q, hilb2.cup(x, y)) != 25 * hilb2.bbf(x, y):
            failures += 1
    passed = self_pair == 575 and failures == 0
    return CheckResult("<q_dual, q_dual> = 575 and <q_dual, xy> = 25 q(x, y)", passed,
                       f"<q_dual,q_dual> = {self_pair}; {cases - failures}/{cases} random pairs agree")


def check_c2() -> CheckResult:
    c = hilb2.c2()
    q = hilb2.q_dual()
    self_pair = hilb2.pair(c, c)
    passed = (c.is_integral() and c == q * Fraction(6, 5) and c.A == 27 and self_pair == 828)
    return CheckResult("c2 is integral, equals (6/5) q_dual, A = 27, <c2, c2> = 828", passed,
                       f"integral={c.is_integral()} A={c.A} <c2,c2>={self_pair}")


def check_point_class() -> CheckResult:
    built = (hilb2.delta_squared() + hilb2.q_dual() * Fraction(2, 5)) * Fraction(1, 8)
    unit = H4Class.basis_vector(hilb2.A_INDEX)
    self_pair = hilb2.pair(built, built)
    reports = [_generic_report(t) for t in range(1, 6)]
    reports += [hodge.analyze(cfg) for cfg in sample_configs().values()]
    all_odd = all(r.is_odd for r in reports)
    passed = built == unit and self_pair == 1 and all_odd
    return CheckResult("(delta^2 + 2/5 q_dual)/8 is the point class and lattices are odd", passed,
                       f"coordinates A=1 rest 0: {built == unit}; self-pairing {self_pair}; "
                       f"{sum(r.is_odd for r in reports)}/{len(reports)} lattices odd")


def check_indivisibility() -> CheckResult:
    d = hilb2.divisibility(hilb2.q_dual() * Fraction(2, 5))
    return CheckResult("(2/5) q_dual is indivisible", d == 1, f"divisibility = {d}")


def check_generic_closed_form(ts=range(1, 11)) -> CheckResult:
    bad = []
    for t in ts:
        r = _generic_report(t)
        if [list(row) for row in r.gram] != hodge.generic_gram_closed_form(t) or r.discriminant != 84 * t ** 3:
            bad.append(t)
    passed = not bad
    return CheckResult(f"generic degree 2t Gram closed form and disc = 84t^3 for t={ts[0]}..{ts[-1]}", passed,
                       "all match" if passed else f"mismatch at t = {bad}")


def check_rank_and_saturation() -> CheckResult:
    named: list[tuple[str, K3Config]] = [(f"t={t}", k3.generic_surface(t)) for t in range(1, 6)]
    named += list(sample_configs().items())
    bad = []
    for name, cfg in named:
        rep = hodge.analyze(cfg)
        integral = all(c.is_integral() for c in rep.basis)
        if not (rep.rank == hodge.expected_rank(cfg.pic_rank) and integral and rep.is_saturated
                and abs(rep.nakajima_change_det) == 1 and rep.rational_span_match):
            bad.append(name)
    ranks = sorted({cfg.pic_rank for _, cfg in named})
    passed = not bad
    return CheckResult("rank r(r+1)/2+r+2, saturated, unimodular change from Nakajima basis", passed,
                       f"{len(named)} configs over Picard ranks {ranks}" + ("" if passed else f"; failed {bad}"))


def check_transcendental_pairing() -> CheckResult:
    cfg = k3.generic_surface(2)
    x, y = H2Class.alpha(18), H2Class.alpha(19)
    trans = k3.transcendental_basis(cfg)
    in_trans = lattice.rank(trans + [list(x.v)]) == len(trans)
    intersection = hilb2.bbf(x, y)
    value = hilb2.pair(hilb2.delta_squared(), hilb2.cup(x, y))
    passed = in_trans and intersection == 1 and value == -2
    return CheckResult("<delta^2, alpha_19 alpha_20> = -2 for degree 4 generic surface", passed,
                       f"alpha_19 transcendental: {in_trans}; (alpha_19, alpha_20) = {intersection}; pairing {value}")


def check_lattice_structure() -> CheckResult:
    lam = k3.k3_lattice()
    bbf_lat = lattice.IntLattice(hilb2.bbf_gram())
    facts = {
        "even": lattice.is_even(lam),
        "unimodular": lattice.is_unimodular(lam),
        "sig(3,19)": lattice.signature(lam) == (3, 19),
        "H2 sig(3,20)": lattice.signature(bbf_lat) == (3, 20),
        "H2 disc 2": lattice.discriminant(bbf_lat) == 2,
        "q(delta)=-2": hilb2.bbf(H2Class.delta(), H2Class.delta()) == -2,
    }
    failed = [k for k, v in facts.items() if not v]
    return CheckResult("K3 lattice even unimodular (3,19); H2 of S^[2] is (3,20) with disc 2", not failed,
                       "all hold" if not failed else f"failed: {failed}")


def _cup_cases(rng: random.Random, cases: int) -> int:
    bad = 0
    for _ in range(cases):
        x, y, z = _random_h2(rng), _random_h2(rng), _random_h2(rng)
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        lhs = hilb2.cup(x * a + y * b, z)
        rhs = hilb2.cup(x, z) * a + hilb2.cup(y, z) * b
        if lhs != rhs or hilb2.cup(x, y) != hilb2.cup(y, x):
            bad += 1
    return bad


def _roundtrip_cases(rng: random.Random, cases: int) -> int:
    bad = 0
    for _ in range(cases):
        coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) if rng.random() < 0.3 else Fraction(0)
                  for _ in range(hilb2.DIM)]
        c = H4Class(coords)
        s = Sym2Class(coords)
        if hilb2.from_sym2(hilb2.to_sym2(c)) != c or hilb2.to_sym2(hilb2.from_sym2(s)) != s:
            bad += 1
    return bad


def _embedding_independence(ts=range(1, 4)) -> list[int]:
    bad = []
    for t in ts:
        other = k3.surface_from_embedding([[2 * t]], [_combo(a1=1, a17=1, a18=t + 1)])
        if hodge.analyze(other).gram != _generic_report(t).gram:
            bad.append(t)
    return bad


def check_properties(cases: int = 500) -> CheckResult:
    rng = random.Random(SEED + 1)
    cup_bad = _cup_cases(rng, cases)
    rt_bad = _roundtrip_cases(rng, cases)
    emb_bad = _embedding_independence()
    passed = cup_bad == 0 and rt_bad == 0 and not emb_bad
    return CheckResult("cup bilinear and symmetric, Sym2 round trip, Gram independent of embedding", passed,
                       f"cup {cases - cup_bad}/{cases}; round trip {cases - rt_bad}/{cases}; "
                       f"embedding mismatches at t = {emb_bad or 'none'}")


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_mu_table,
    check_qdual_identities,
    check_c2,
    check_point_class,
    check_indivisibility,
    check_generic_closed_form,
    check_rank_and_saturation,
    check_transcendental_pairing,
    check_lattice_structure,
    check_properties,
)


def run_all() -> list[CheckResult]:
    results = []
    for check in CHECKS:
        try:
            results.append(check())
        except Exception as exc:  # a crashing check is a failed check, not a crashed suite
            results.append(CheckResult(check.__name__, False, f"{type(exc).__name__}: {exc}"))
    return results
