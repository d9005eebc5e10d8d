import random

import sympy

import pytest

from rikuna.core import (
    RikunaMap,
    pq_pair,
    pq_z3,
    pq_z3_composed,
    reduction_check,
    rikuna_z3,
    rikuna_z3_composed,
)
from rikuna.finite_field import INF, FqPoly, field_of_order, make_field

X = sympy.symbols("x")


def _sympy_pq3(n):
    """P_n, Q_n for ell = 3 from the two powers (x - zeta)^N, (x - 1/zeta)^N."""
    z = sympy.Rational(-1, 2) + sympy.sqrt(-3) / 2
    zi = sympy.conjugate(z)
    N = 3**n
    a, b = (X - z) ** N, (X - zi) ** N
    P = sympy.expand((a * zi - b * z) / (zi - z))
    Q = sympy.expand((a - b) / (zi - z))
    to = lambda e: tuple(int(c) for c in reversed(sympy.Poly(sympy.nsimplify(e), X).all_coeffs()))
    return to(P), to(Q)


@pytest.mark.parametrize("n", [1, 2])
def test_pq_z3_vs_sympy_two_powers(n):
    P, Q = pq_z3(n)
    assert (P.coeffs, Q.coeffs) == _sympy_pq3(n)


def test_level_one():
    assert rikuna_z3(1, 0).coeffs == (-1, -3, 0, 1)
    assert rikuna_z3(1, 1).coeffs == (-1, -6, -3, 1)
    assert rikuna_z3(0, 5).coeffs == (-5, 1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_binomial_sum_vs_composition(n):
    assert [f.coeffs for f in pq_z3(n)] == [f.coeffs for f in pq_z3_composed(n)]
    for t in (-3, 0, 2):
        assert rikuna_z3(n, t).coeffs == rikuna_z3_composed(n, t).coeffs


def test_rikuna_z3_degree_and_monic():
    for n in range(1, 5):
        f = rikuna_z3(n, 7)
        assert f.degree == 3**n and f.is_monic()


MAPS = [(7, 3, None), (13, 3, None), (31, 5, 18), (31, 5, 12), (29, 7, None), (16, 5, None), (64, 7, None)]


@pytest.mark.parametrize("q,ell,zplus", MAPS)
def test_three_constructions_agree(q, ell, zplus):
    rmap = RikunaMap(field_of_order(q), ell, zplus=zplus)
    for n in (1, 2):
        pair = pq_pair(n, rmap)
        assert (pair.P, pair.Q) == rmap.pq(n)


@pytest.mark.parametrize("q,ell,zplus", MAPS)
def test_pq_depends_only_on_zeta_plus(q, ell, zplus):
    rmap = RikunaMap(field_of_order(q), ell, zplus=zplus)
    swapped = RikunaMap(rmap.ctx, ell, zeta=rmap.zeta_inv)
    assert swapped.zplus == rmap.zplus
    assert swapped.pq(2) == rmap.pq(2)
    assert swapped.successor_table() == rmap.successor_table()


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_z3_reduces_to_field_construction(p):
    rmap = RikunaMap(make_field(p), 3)
    for n in (1, 2):
        for t in range(-3, 4):
            assert FqPoly.from_ints(rmap.ctx, rikuna_z3(n, t).coeffs) == rmap.r(n, t)


def test_zeta_not_rational_uses_trace():
    # 19 = -1 mod 5: zeta lives in F_{19^2} but zeta+ is already in F_19
    ctx = make_field(19)
    s = next(c for c in range(19) if (c * c + c - 1) % 19 == 0)  # zeta+ solves y^2 + y - 1
    rmap = RikunaMap(ctx, 5, zplus=s)
    assert rmap.zeta is None
    P, Q = rmap.pq(1)
    assert P.degree == 5 and Q.degree == 4
    with pytest.raises(ValueError):
        RikunaMap(ctx, 5, zplus=(s + 1) % 19)


def test_phi_iterates_are_p_over_q():
    rmap = RikunaMap(make_field(43), 7)
    P2, Q2 = rmap.pq(2)
    rng = random.Random(3)
    for _ in range(30):
        a = rmap.ctx.elem(rng.randrange(43))
        img = rmap.phi(rmap.phi(a))
        den = Q2(a)
        if den.is_zero():
            assert img is INF
        else:
            assert img == P2(a) / den
    assert rmap.phi(INF) is INF


def test_zeta_is_fixed():
    rmap = RikunaMap(make_field(31), 5, zplus=18)
    assert rmap.phi(rmap.zeta) == rmap.zeta
    assert rmap.phi(rmap.zeta_inv) == rmap.zeta_inv


def test_roots_of_r_n_are_preimages():
    rmap = RikunaMap(make_field(37), 3)
    for t in range(37):
        roots = [a for a in rmap.ctx.elements() if rmap.r(2, t)(a).is_zero()]
        pre = [a for a in rmap.ctx.elements() if rmap.phi(rmap.phi(a)) == rmap.ctx(t)]
        assert roots == pre


def test_constructor_errors():
    with pytest.raises(ValueError):
        RikunaMap(make_field(7), 4)
    with pytest.raises(ValueError):
        RikunaMap(make_field(5), 5)
    with pytest.raises(ValueError):
        RikunaMap(make_field(31), 5, zeta=3)


def test_reduction_check_reports_inapplicable():
    rep = reduction_check(1, 5, 7)
    assert not rep.applicable and rep.holds is None
    assert reduction_check(2, 4, 3).holds
