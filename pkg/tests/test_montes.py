from fractions import Fraction

import pytest

from conftest import index_valuation_oracle
from rikuna.core import rikuna_z3
from rikuna.montes import index_p, lattice_count, lower_hull, newton_polygon, phi_development
from rikuna.zpoly import ZPoly


def test_development_reassembles():
    f = ZPoly([7, 11, 12, 23, 1])
    phi = ZPoly([2, 1])
    dev = phi_development(f, phi)
    assert dev.reassemble().coeffs == f.coeffs
    assert [int(a[0]) for a in dev.coeffs] == [-135, 207, -102, 15, 1]


def test_example_polygon():
    f = ZPoly([7, 11, 12, 23, 1])
    poly = newton_polygon(phi_development(f, ZPoly([2, 1]), 3))
    assert [s.slope for s in poly.sides] == [Fraction(-1), Fraction(-1, 2)]
    assert lattice_count(poly).count == 3


def test_lower_hull():
    pts = [(0, 5), (1, 1), (2, 3), (3, 0), (4, 2)]
    assert lower_hull(pts) == [(0, 5), (1, 1), (3, 0), (4, 2)]


# small polynomials whose index a round-two maximal order settles
CASES = [
    ([7, 11, 12, 23, 1], 3),
    ([-8, 0, 1], 2),  # x^2 - 8
    ([2, 0, 0, 1], 3),  # x^3 + 2
    ([-1, -3, 0, 1], 3),
    ([25, 0, 0, 0, 1], 5),
    ([-10, 0, 0, 1], 2),
]


@pytest.mark.parametrize("coeffs,p", CASES)
def test_index_vs_round_two(coeffs, p):
    rep = index_p(ZPoly(coeffs), p)
    assert rep.exact
    assert rep.total == index_valuation_oracle(coeffs, p)


@pytest.mark.parametrize("t", [-4, -1, 0, 1, 2, 4, 7])
def test_rikuna_level_one_vs_round_two(t):
    f = rikuna_z3(1, t)
    for p in (3, 7, 13):
        rep = index_p(f, p)
        if rep.exact:
            assert rep.total == index_valuation_oracle(f.coeffs, p)


def test_phi_dividing_f_is_shifted():
    # x^3 - 9x = x(x - 3)(x + 3): both x and x + 3 divide f over Z.
    # Z[x]/(f) has index 3 * 3 * 6 = 54 in Z^3 (the Vandermonde of the roots)
    f = ZPoly([0, -9, 0, 1])
    rep = index_p(f, 3)
    assert [fi.phi.coeffs for fi in rep.factors] == [(6, 1)]
    assert rep.exact and rep.total == 3


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        index_p(ZPoly([1, 2]), 4)
    with pytest.raises(ValueError):
        index_p(ZPoly([1, 0, 2]), 3)
    with pytest.raises(ValueError):
        index_p(ZPoly([1, 2, 1]), 3)
