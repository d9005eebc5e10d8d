import os
import random
import subprocess
import sys

import pytest

from rikuna import _pykernels as py
from rikuna import kernels
from rikuna.finite_field import make_field

native = kernels.native
needs_native = pytest.mark.skipif(native is None, reason="compiled kernels not built")

FIELDS = [(191, 1), (65521, 1), (2147483647, 1), (3, 5), (2, 11)]


def rand_poly(rng, q, deg, monic=False):
    a = [rng.randrange(q) for _ in range(deg)] + [1 if monic else rng.randrange(1, q)]
    return a


def rows_as_lists(rows):
    out = []
    for r in rows:
        r = [int(v) for v in r]
        while r and r[-1] == 0:
            r.pop()
        out.append(r)
    return out


@needs_native
@pytest.mark.parametrize("p,k", FIELDS)
def test_native_agrees_with_python(p, k):
    F = make_field(p, k).kf
    rng = random.Random(p + k)
    for _ in range(25):
        a = rand_poly(rng, F.q, rng.randrange(0, 12))
        b = rand_poly(rng, F.q, rng.randrange(0, 9))
        m = rand_poly(rng, F.q, rng.randrange(1, 8), monic=True)
        assert native.mul(F, a, b) == py.mul(F, a, b)
        assert native.divmod_(F, a, b) == py.divmod_(F, a, b)
        assert native.rem(F, a, m) == py.rem(F, a, m)
        assert native.mulmod(F, a, b, m) == py.mulmod(F, a, b, m)
        e = rng.randrange(1, 10**6)
        assert native.powmod(F, a, e, m) == py.powmod(F, a, e, m)
        assert native.gcd(F, a, b) == py.gcd(F, a, b)
        assert native.monic(F, a) == py.monic(F, a)
        nrows = native.frobenius_matrix(F, m)
        prows = py.frobenius_matrix(F, m)
        assert rows_as_lists(nrows) == prows
        h = rand_poly(rng, F.q, len(m) - 2)
        assert native.frobenius_apply(F, nrows, h) == py.frobenius_apply(F, prows, h)


@needs_native
def test_native_functional_graph():
    rng = random.Random(5)
    for n in (1, 2, 17, 300):
        succ = [rng.randrange(n) for _ in range(n)]
        assert [list(x) for x in native.functional_graph(succ)] == [list(x) for x in py.functional_graph(succ)]


def test_functional_graph_brute():
    rng = random.Random(9)
    succ = [rng.randrange(40) for _ in range(40)]
    tail, cyc = py.functional_graph(succ)
    for v in range(40):
        seen, w, i = {}, v, 0
        while w not in seen:
            seen[w] = i
            w, i = succ[w], i + 1
        assert tail[v] == seen[w] and cyc[v] == i - seen[w]


def test_kernel_arithmetic_is_polynomial_arithmetic():
    F = make_field(13).kf
    a, b = [1, 2, 3], [4, 0, 1]
    # (1 + 2x + 3x^2)(4 + x^2) = 4 + 8x + 13x^2 + 2x^3 + 3x^4
    assert kernels.mul(F, a, b) == [4, 8, 0, 2, 3]
    q, r = kernels.divmod_(F, kernels.mul(F, a, b), b)
    assert (q, r) == (a, [])


def test_frobenius_apply_rejects_long_input():
    F = make_field(7).kf
    m = [1, 0, 1]
    with pytest.raises(ValueError):
        kernels.frobenius_apply(F, kernels.frobenius_matrix(F, m), [1, 2, 3])
    with pytest.raises(ValueError):
        py.frobenius_apply(F, py.frobenius_matrix(F, m), [1, 2, 3])


def test_generic_mode_uses_python():
    F = make_field(2, 17).kf
    assert F.mode == "generic"
    assert kernels.mul(F, [3, 1], [5, 1]) == py.mul(F, [3, 1], [5, 1])


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, RIKUNA_PURE="1")
    code = (
        "import rikuna, rikuna.kernels as k;"
        "from rikuna.finite_field import make_field, FqPoly, factor_fq;"
        "F = make_field(31);"
        "f = FqPoly.from_ints(F, [1, 0, 0, 0, 0, 1]);"
        "print(rikuna.BACKEND, k.native is None, len(factor_fq(f)))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    # x^5 + 1 = prod (x + zeta), 5 | 30, so five linear factors
    assert out.stdout.split() == ["python", "True", "5"]
