import random

import sympy
from hypothesis import given, settings, strategies as st

import pytest

from conftest import brute_order
from rikuna.finite_field import (
    INF,
    FieldCtx,
    FqPoly,
    QuadExt,
    degree_profile,
    expand,
    factor_fq,
    field_of_order,
    find_zeta,
    make_field,
    projective_line,
    squarefree_decomposition,
    zeta_from_zeta_plus,
)

FIELDS = [(7, 1), (31, 1), (2, 3), (3, 2), (2, 8), (5, 3), (2, 17)]


@pytest.mark.parametrize("p,k", FIELDS)
def test_field_axioms_sampled(p, k):
    F = make_field(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(200):
        a, b, c = (F.elem(rng.randrange(F.q)) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a - a == F(0)
        if not a.is_zero():
            assert a * a.inverse() == F(1)
            assert a ** (F.q - 1) == F(1)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (2, 4), (5, 2)])
def test_extension_matches_sympy_gf_modulus(p, k):
    F = make_field(p, k)
    mod = sympy.Poly(list(reversed(F.modulus)), sympy.symbols("x"), modulus=p)
    assert mod.is_irreducible
    # element multiplication is polynomial multiplication mod the modulus
    x = sympy.symbols("x")
    for a in range(F.q):
        for b in range(0, F.q, 3):
            pa = sympy.Poly(list(reversed(F.digits(a))), x, modulus=p)
            pb = sympy.Poly(list(reversed(F.digits(b))), x, modulus=p)
            prod = (pa * pb).rem(mod)
            coeffs = [int(c) % p for c in reversed(prod.all_coeffs())]
            assert F.digits(F.mul(a, b)) == coeffs + [0] * (k - len(coeffs))


def test_modulus_validation():
    with pytest.raises(ValueError):
        FieldCtx(2, modulus=[1, 0, 1])  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(ValueError):
        FieldCtx(3, 2)
    with pytest.raises(ValueError):
        field_of_order(12)


@pytest.mark.parametrize("q", [7, 13, 16, 49, 64, 81])
def test_element_order_brute(q):
    F = field_of_order(q)
    for code in range(1, F.q):
        assert F.order(code) == brute_order(F.mul, 1, code)


def test_find_zeta_is_least():
    F = make_field(31)
    z, zi = find_zeta(F, 5)
    assert int(z) == 2 and z * zi == F(1)
    with pytest.raises(ValueError):
        find_zeta(make_field(7), 5)


def test_zeta_from_zeta_plus():
    F = make_field(31)
    z0, z1 = zeta_from_zeta_plus(F, 18, 5)
    assert (int(z0), int(z1)) == (2, 16)
    assert z0 + z1 == F(18)
    with pytest.raises(ValueError):
        zeta_from_zeta_plus(F, 3, 5)


def test_quad_ext_orders():
    F = make_field(7)
    # y^2 - s*y + 1 is irreducible when s^2 - 4 is a non-square
    s = next(c for c in range(7) if pow((c * c - 4) % 7, 3, 7) == 6)
    E = QuadExt(F, s)
    elems = [(a, b) for a in range(7) for b in range(7) if (a, b) != (0, 0)]
    for u in elems[::5]:
        assert E.order(u) == brute_order(E.mul, E.one, u)
        assert E.mul(u, E.inv(u)) == E.one
    with pytest.raises(ValueError):
        QuadExt(F, 2)  # y^2 - 2y + 1 = (y - 1)^2


def test_projective_line_order():
    F = make_field(5)
    pts = projective_line(F)
    assert pts[-1] is INF and [int(a) for a in pts[:-1]] == list(range(5))


poly_st = st.lists(st.integers(min_value=0, max_value=12), min_size=2, max_size=9)


@given(poly_st, st.sampled_from([(13, 1), (2, 4), (3, 2)]))
@settings(max_examples=40, deadline=None)
def test_factor_fq_roundtrip(cs, pk):
    F = make_field(*pk)
    f = FqPoly(F, [c % F.q for c in cs])
    if f.degree < 1:
        return
    facs = factor_fq(f, seed=1)
    assert expand(facs, f.lc) == f
    assert all(g.is_irreducible() and g.lc == 1 for g, _ in facs)
    prof = {}
    for g, m in facs:
        prof[g.degree, m] = prof.get((g.degree, m), 0) + 1
    assert prof == degree_profile(f)


@given(poly_st)
@settings(max_examples=40, deadline=None)
def test_factor_fq_vs_sympy(cs):
    p = 11
    f = FqPoly.from_ints(make_field(p), cs)
    if f.degree < 1:
        return
    x = sympy.symbols("x")
    _, sf = sympy.factor_list(sympy.Poly(list(reversed(cs)), x, modulus=p))
    want = sorted((int(g.degree()), m) for g, m in sf)
    got = sorted((g.degree, m) for g, m in factor_fq(f))
    assert got == want


def test_factor_fq_seed_independent():
    F = make_field(2, 8)
    f = FqPoly(F, [3, 0, 7, 1, 0, 0, 9, 1])
    assert factor_fq(f, seed=1) == factor_fq(f, seed=99)


def test_squarefree_decomposition_char_p():
    F = make_field(3)
    x = FqPoly(F, [0, 1])
    f = (x + 1) ** 3 * (x + 2) ** 2 * x
    parts = {m: g for g, m in squarefree_decomposition(f)}
    assert parts[3] == x + 1 and parts[2] == x + 2 and parts[1] == x


def test_poly_eval_and_derivative():
    F = make_field(7)
    f = FqPoly.from_ints(F, [1, 2, 3])
    assert f(2) == F(1 + 4 + 12)
    assert f.derivative() == FqPoly.from_ints(F, [2, 6])
    assert str(f) == "3*x^2 + 2*x + 1"
