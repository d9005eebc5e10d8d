import sympy
from hypothesis import given, settings, strategies as st

import pytest

from conftest import X, sylvester_resultant, sympy_disc, to_sympy
from rikuna.zpoly import ZPoly, binomial_power, discriminant, resultant

coeff_lists = st.lists(st.integers(min_value=-30, max_value=30), min_size=1, max_size=7)


def monic(cs):
    return ZPoly(list(cs) + [1])


def test_basic_shape():
    assert ZPoly([0, 0]).degree == -1
    f = ZPoly([1, 2, 0, 0])
    assert f.degree == 1 and f.lc == 2 and f[5] == 0
    assert ZPoly.from_roots([1, 2]).coeffs == (2, -3, 1)


@given(coeff_lists, coeff_lists)
@settings(max_examples=50, deadline=None)
def test_ring_ops_match_sympy(a, b):
    fa, fb = ZPoly(a), ZPoly(b)
    prod = to_sympy(a) * to_sympy(b)
    assert (fa * fb).coeffs == ZPoly(reversed(prod.all_coeffs())).coeffs
    assert ((fa + fb) - fb).coeffs == fa.coeffs


@given(coeff_lists, coeff_lists)
@settings(max_examples=50, deadline=None)
def test_divmod_monic(a, b):
    fa, fb = ZPoly(a), monic(b)
    q, r = divmod(fa, fb)
    assert (q * fb + r).coeffs == fa.coeffs
    assert r.degree < fb.degree


def test_divmod_requires_monic():
    with pytest.raises(ValueError):
        divmod(ZPoly([1, 1, 1]), ZPoly([1, 2]))


@given(coeff_lists, st.integers(min_value=-5, max_value=5))
@settings(max_examples=40, deadline=None)
def test_shift_and_compose(a, c):
    f = ZPoly(a)
    assert f.shift(c).coeffs == f.compose(ZPoly([c, 1])).coeffs
    for x in range(-3, 4):
        assert f.shift(c)(x) == f(x + c)


def test_homogeneous_eval():
    # den^3 * f(num/den) for f = x^3 - 3x - 1
    f = ZPoly([-1, -3, 0, 1])
    num, den = ZPoly([1, 2]), ZPoly([3, 0, 1])
    n, d = 1 + 2 * X, 3 + X**2
    want = sympy.Poly(n**3 - 3 * n * d**2 - d**3, X)
    got = f.homogeneous_eval(num, den, 3)
    assert got.coeffs == tuple(int(c) for c in reversed(want.all_coeffs()))


def test_binomial_power():
    assert binomial_power(2, 5).coeffs == (ZPoly([-2, 1]) ** 5).coeffs


@given(coeff_lists, coeff_lists)
@settings(max_examples=60, deadline=None)
def test_resultant_vs_sylvester(a, b):
    fa, fb = ZPoly(a), ZPoly(b)
    if fa.degree < 1 or fb.degree < 1:
        return
    assert resultant(fa, fb) == sylvester_resultant(fa.coeffs, fb.coeffs)


@given(coeff_lists)
@settings(max_examples=60, deadline=None)
def test_discriminant_vs_sympy(a):
    f = monic(a)
    if f.degree < 2:
        return
    assert discriminant(f) == sympy_disc(f.coeffs)


def test_exact_div_and_content():
    f = ZPoly([6, 9, 12])
    assert f.content() == 3
    assert f.exact_div(3).coeffs == (2, 3, 4)
    with pytest.raises(ArithmeticError):
        f.exact_div(5)
    assert f.reduce(3) == []
    assert (f % 5).coeffs == (1, 4, 2)
