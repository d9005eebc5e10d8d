"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs the same call on both backends, checks the outputs agree,
and prints the best-of-N time per call.
"""

import argparse
import random
import timeit

from rikuna import _pykernels, kernels
from rikuna.core import RikunaMap
from rikuna.finite_field import factor_fq, field_of_order


def _cases():
    rng = random.Random(7)
    for q, deg in ((191, 125), (65521, 200), (3**5, 81), (2**11, 60)):
        ctx = field_of_order(q)
        F = ctx.kf
        a = [rng.randrange(q) for _ in range(deg)] + [1]
        b = [rng.randrange(q) for _ in range(deg)] + [1]
        h = _pykernels.rem(F, b, a)
        yield f"mul        q={q:<6} deg {deg}", F, "mul", (a, b)
        yield f"rem        q={q:<6} deg {2 * deg}/{deg}", F, "rem", (_pykernels.mul(F, a, b), a)
        yield f"powmod x^q q={q:<6} deg {deg}", F, "powmod", ([0, 1], q, a)
        yield f"gcd        q={q:<6} deg {deg}", F, "gcd", (a, h)
        yield f"frob. mat  q={q:<6} deg {deg}", F, "frobenius_matrix", (a,)


def _time(fn, args, repeat):
    timer = timeit.Timer(lambda: fn(*args))
    n, _ = timer.autorange()
    return min(timer.repeat(repeat, n)) / n


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.native is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")
    print(f"{'case':<34} {'python':>11} {'cython':>11} {'speedup':>8}")
    for label, F, name, call_args in _cases():
        py, nat = getattr(_pykernels, name), getattr(kernels.native, name)
        expected, got = py(F, *call_args), nat(F, *call_args)
        if name == "frobenius_matrix":
            # the compiled side packs the rows into a square array
            got = [_pykernels._trim([int(c) for c in row]) for row in got]
        assert expected == got, label
        tp = _time(lambda *a: py(F, *a), call_args, args.repeat)
        tc = _time(lambda *a: nat(F, *a), call_args, args.repeat)
        print(f"{label:<34} {tp * 1e3:9.3f}ms {tc * 1e3:9.3f}ms {tp / tc:7.1f}x")

    # end to end: factor r_3(x, t) over F_191 for ell = 5 with each backend
    rmap = RikunaMap(field_of_order(191), 5)
    f = rmap.r(3, 10)
    saved = {n: getattr(kernels, n) for n in kernels._NAMES}
    tc = _time(lambda: factor_fq(f), (), 1)
    for n in kernels._NAMES:
        setattr(kernels, n, getattr(_pykernels, n))
    try:
        tp = _time(lambda: factor_fq(f), (), 1)
    finally:
        for n, fn in saved.items():
            setattr(kernels, n, fn)
    label = "factor r_3 (ell=5) over F_191"
    print(f"{label:<34} {tp * 1e3:9.3f}ms {tc * 1e3:9.3f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
