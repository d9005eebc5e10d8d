import sympy
from sympy.polys.numberfields.basis import round_two

import pytest

from conftest import index_valuation_oracle, sympy_disc, to_sympy
from rikuna.arith import val_p
from rikuna.closed_forms import (
    Inapplicable,
    coeff_a,
    disc_rn_closed,
    field_disc,
    ind3_closed,
    index_closed,
    indp_closed,
    norm_t,
    x_minus_1_polygon,
)
from rikuna.core import rikuna_z3
from rikuna.montes import index_p, newton_polygon, phi_development
from rikuna.zpoly import ZPoly


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("t", [-7, -2, -1, 0, 1, 3, 4, 18])
def test_disc_closed_vs_sympy(n, t):
    sign, mag = disc_rn_closed(n, t)
    assert sign * mag.value() == sympy_disc(rikuna_z3(n, t).coeffs)


@pytest.mark.parametrize("t", range(-8, 9))
def test_ind3_level_one_vs_round_two(t):
    assert ind3_closed(1, t).ind3 == index_valuation_oracle(rikuna_z3(1, t).coeffs, 3)


@pytest.mark.parametrize("t", [1, 4, -2])
def test_ind3_level_two_vs_round_two(t):
    assert ind3_closed(2, t).ind3 == index_valuation_oracle(rikuna_z3(2, t).coeffs, 3)


# (t, p) with p^v || t^2 + t + 1 for v = 1, 2, 3
@pytest.mark.parametrize("t,p", [(2, 7), (30, 7), (18, 7), (3, 13), (22, 13)])
def test_indp_level_one_vs_round_two(t, p):
    assert norm_t(t) % p == 0
    assert indp_closed(1, t, p) == index_valuation_oracle(rikuna_z3(1, t).coeffs, p)


@pytest.mark.parametrize("t,p,want", [(18, 7, 9), (30, 7, 4), (22, 13, 4)])
def test_indp_level_two_vs_lattice_count(t, p, want):
    # sympy's round_two raises ClosureFailure on these degree-9 fields,
    # so the Ore lattice count (regular here) is the reference
    rep = index_p(rikuna_z3(2, t), p)
    assert rep.exact
    assert indp_closed(2, t, p) == rep.total == want


def test_indp_inapplicable():
    with pytest.raises(Inapplicable):
        indp_closed(1, 2, 3)
    with pytest.raises(Inapplicable):
        indp_closed(1, 2, 5)
    with pytest.raises(ValueError):
        indp_closed(1, 2, 9)


@pytest.mark.parametrize("t", [-4, 0, 1, 7, 18])
def test_field_disc_vs_round_two(t):
    rep = field_disc(1, t)
    _, dK = round_two(to_sympy(rikuna_z3(1, t).coeffs))
    dK = int(dK)
    assert rep.sign * rep.disc_K().value() == dK
    for pd in rep.primes:
        assert pd.nu_disc_K == val_p(dK, pd.p)


def test_field_disc_printed_exponent_is_flagged():
    rep = field_disc(1, 0)
    assert rep.nu_disc_K(3) == 4
    assert rep.primes[0].printed == 3
    assert rep.discrepancies == [3] and rep.warnings


def test_printed_form_with_negative_exponent():
    rep = field_disc(2, 1000)
    assert rep.primes[0].printed < 0 and rep.printed_disc_K() is None
    assert rep.nu_disc_K(3) == rep.primes[0].nu_disc_r - 2 * rep.primes[0].ind


def test_index_closed_assembles():
    f = index_closed(2, 18)
    assert f.exponent(7) == 9 and f.exponent(3) == ind3_closed(2, 18).ind3


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("t", [-5, 1, 4])
def test_coeff_a_is_taylor_coefficient(n, t):
    x = sympy.symbols("x")
    f = to_sympy(rikuna_z3(n, t).coeffs).as_expr()
    shifted = sympy.Poly(sympy.expand(f.subs(x, x + 1)), x)
    low = list(reversed(shifted.all_coeffs()))
    for m in range(0, 3**n + 1, max(1, 3 ** (n - 1))):
        assert coeff_a(n, m, t).value == low[m]


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("t", [1, 4, 7, -2])
def test_x_minus_1_polygon_vs_montes(n, t):
    f = rikuna_z3(n, t)
    poly = newton_polygon(phi_development(f, ZPoly([-1, 1]), 3))
    got = x_minus_1_polygon(n, t)
    # the prediction covers the descending part of the principal polygon
    assert got == poly.vertices[: len(got)]


def test_x_minus_1_polygon_needs_t_1_mod_3():
    with pytest.raises(Inapplicable):
        x_minus_1_polygon(1, 0)
