"""Shared oracles.  Everything here is deliberately independent of the
package internals: sympy for exact algebra, brute force for the rest."""

import sympy
from sympy.polys.numberfields.basis import round_two

from rikuna.arith import val_p

X = sympy.symbols("x")


def to_sympy(coeffs_low_to_high):
    return sympy.Poly(list(reversed(list(coeffs_low_to_high))), X, domain="ZZ")


def sylvester_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    a = list(reversed(f))  # high to low
    b = list(reversed(g))
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (size - n - 1 - i))
    return sympy.Matrix(rows).det(method="bareiss")


def sympy_disc(coeffs):
    return int(sympy.discriminant(to_sympy(coeffs).as_expr(), X))


def index_valuation_oracle(coeffs, p):
    """v_p([O_K : Z[theta]]) from a round-two maximal order."""
    f = to_sympy(coeffs)
    _, dK = round_two(f)
    d = int(sympy.discriminant(f.as_expr(), X))
    ratio = sympy.Rational(d, int(dK))
    assert ratio.q == 1 and sympy.sqrt(ratio).is_integer
    return val_p(int(sympy.sqrt(ratio)), p)


def brute_order(mul, one, a):
    """Multiplicative order by repeated multiplication."""
    k, cur = 1, a
    while cur != one:
        cur = mul(cur, a)
        k += 1
    return k


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
