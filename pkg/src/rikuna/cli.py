"""Command-line interface.

Every command prints one JSON envelope with keys command, parameters,
results, warnings and status.  Integers are written as decimal strings so
nothing is rounded by JSON readers.  Exit codes: 0 success, 1 I/O failure,
2 usage error, 3 precondition failed, 4 predicted and observed disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import closed_forms, dynamics, montes
from .arith import factorint, is_prime, val_p
from .core import RikunaMap, rikuna_z3
from .decomposition import PrimeSpec, decompose
from .finite_field import FqPoly, field_of_order, make_field

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _canon(obj):
    """Make results JSON-safe: ints become decimal strings, tuples lists."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _canon(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canon(v) for v in obj]
    return str(obj) if not isinstance(obj, (str, float)) else obj


def _factored(fi) -> dict:
    return {
        "value": fi.value(),
        "factors": [[p, e] for p, e in fi.factors],
        "cofactor": fi.cofactor,
        "text": str(fi),
    }


def _t_values(args) -> list[int]:
    if args.t_range is not None:
        lo, sep, hi = args.t_range.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"--t-range expects a..b, got {args.t_range!r}") from None
        if not sep or a > b:
            raise UsageError(f"--t-range expects a..b with a <= b, got {args.t_range!r}")
        return list(range(a, b + 1))
    if args.t is None:
        raise UsageError("give --t or --t-range")
    return [args.t]


def _sweep(fn, ts, jobs, *extra):
    """Apply fn(t, *extra) over ts, keeping the order of ts."""
    if jobs <= 1 or len(ts) <= 1:
        return [fn(t, *extra) for t in ts]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, ts, *[[e] * len(ts) for e in extra]))


# poly -----------------------------------------------------------------------


def _poly_one(t, n, ell, mod, k, zplus):
    if mod is None:
        f = rikuna_z3(n, t)
        return {"t": t, "coefficients": list(reversed(f.coeffs)), "text": str(f)}, []
    if ell == 3 and k == 1 and zplus is None:
        f = rikuna_z3(n, t)
        ctx = make_field(mod)
        g = FqPoly.from_ints(ctx, f.coeffs)
    else:
        ctx = make_field(mod, k)
        rmap = RikunaMap(ctx, ell, zplus=zplus)
        g = rmap.r(n, t)
    coeffs = [int(ctx.elem(c)) if ctx.k == 1 else c for c in reversed(g.coeffs)]
    return {"t": t, "coefficients": coeffs, "text": g.to_str()}, []


def cmd_poly(args):
    if args.l != 3 and args.mod is None:
        raise UsageError(f"ell={args.l} has coefficients in Z[zeta+]; give --mod to reduce")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    out = _sweep(_poly_one, _t_values(args), args.jobs, args.n, args.l, args.mod, args.k, args.zplus)
    results = {
        "order": "descending powers, leading coefficient first",
        "polynomials": [r for r, _ in out],
    }
    return results, [w for _, ws in out for w in ws], EXIT_OK


# disc / index -------------------------------------------------------------------


def _disc_one(t, n):
    rep = closed_forms.field_disc(n, t)
    printed = rep.printed_disc_K()
    res = {
        "t": t,
        "sign": rep.sign,
        "disc_r": _factored(rep.disc_r),
        "disc_K": _factored(rep.disc_K()),
        "disc_K_printed": _factored(printed) if printed is not None else None,
        "primes": [
            {
                "p": pd.p,
                "v_disc_r": pd.nu_disc_r,
                "v_ind": pd.ind,
                "v_disc_K": pd.nu_disc_K,
                "v_disc_K_printed": pd.printed,
                "agrees": pd.agrees,
            }
            for pd in rep.primes
        ],
        "complete": rep.complete,
    }
    return res, [f"t={t}: {w}" for w in rep.warnings]


def cmd_disc(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    out = _sweep(_disc_one, _t_values(args), args.jobs, args.n)
    return {"reports": [r for r, _ in out]}, [w for _, ws in out for w in ws], EXIT_OK


def _index_one(t, n, p, check):
    warnings = []
    entries = []
    primes = [p] if p is not None else None
    if primes is None:
        base = factorint(closed_forms.norm_t(t))
        if not base.complete:
            warnings.append(f"t={t}: t^2+t+1 has an unfactored cofactor {base.cofactor}")
        primes = sorted({3} | set(base.primes()))
    for q in primes:
        if q == 3:
            r = closed_forms.ind3_closed(n, t)
            e = {"p": 3, "ind": r.ind3, "V": r.V, "E": r.E, "branch": r.branch}
        elif closed_forms.norm_t(t) % q:
            e = {"p": q, "ind": 0, "branch": "p does not divide disc r_n"}
        else:
            e = {"p": q, "ind": closed_forms.indp_closed(n, t, q), "v": val_p(closed_forms.norm_t(t), q)}
        if check:
            mr = montes.index_p(rikuna_z3(n, t), q)
            e["montes"] = {"total": mr.total, "exact": mr.exact}
            if mr.total != e["ind"] or not mr.exact:
                warnings.append(f"t={t}, p={q}: closed form {e['ind']} vs Montes {mr.total} (exact={mr.exact})")
        entries.append(e)
    return {"t": t, "primes": entries, "index": _factored(closed_forms.index_closed(n, t))}, warnings


def cmd_index(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.p is not None and not is_prime(args.p):
        raise UsageError(f"--p {args.p} is not a prime")
    out = _sweep(_index_one, _t_values(args), args.jobs, args.n, args.p, args.check)
    warnings = [w for _, ws in out for w in ws]
    status = EXIT_MISMATCH if args.check and any("Montes" in w for w in warnings) else EXIT_OK
    return {"reports": [r for r, _ in out]}, warnings, status


# graph ---------------------------------------------------------------------------


CENSUS_COLUMNS = ["divisor", "count", "period", "preperiod"]


def cmd_graph(args):
    q, ell = args.q, args.l
    warnings = []
    results = {}
    if args.census or args.dot is None:
        if (q - 1) % ell:
            raise UsageError(
                f"q={q} is not 1 mod {ell}; the census is only described for q = 1 mod ell "
                "(--dot still works by iteration)"
            )
        s = dynamics.graph_summary(q, ell)
        results["census"] = {
            "q": q,
            "ell": ell,
            "lambda": s.lam,
            "omega": s.omega,
            "columns": CENSUS_COLUMNS,
            "rows": [[r.divisor, r.count, r.period, r.preperiod] for r in s.rows],
            "tails": {str(k): v for k, v in s.tails.items()},
            "fixed_points": [str(z) for z in s.fixed_points],
            "total": s.total,
        }
    if args.dot is not None:
        rmap = RikunaMap(field_of_order(q), ell, zplus=args.zplus)
        g = dynamics.build_graph(q, ell, rmap)
        dynamics.export_dot(g, args.dot)
        results["dot"] = {
            "path": str(args.dot),
            "vertices": len(g.succ),
            "components": len(g.components()),
            "periodic": sum(1 for x in g.tail if x == 0),
        }
    return results, warnings, EXIT_OK


# decompose -------------------------------------------------------------------------


def _pattern(fp):
    if fp is None:
        return None
    return {"entries": [list(e) for e in fp.entries], "squarefree": fp.squarefree, "text": str(fp)}


def _decompose_one(t, n, spec, ell, seed):
    rep = decompose(n, t, spec, ell, seed)
    res = {
        "t": t,
        "t_residue": str(rep.t_res),
        "pper": rep.pper,
        "M": rep.M,
        "q_is_1_mod_ell": rep.split_field,
        "squarefree": rep.squarefree,
        "index_coprime": rep.index_coprime,
        "applicable": rep.applicable,
        "predicted": _pattern(rep.predicted),
        "observed": _pattern(rep.observed),
        "match": rep.match,
        "primes_above": [
            {"residue_degree": pa.residue_degree, "ramification": pa.ramification, "count": pa.count}
            for pa in rep.primes
        ],
    }
    return res, [f"t={t}: {w}" for w in rep.warnings], rep.match is False


def cmd_decompose(args):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.l != 3 and args.zplus is None:
        raise UsageError(f"ell={args.l} needs --zplus, the residue of zeta+ at the prime")
    spec = PrimeSpec(args.p, args.k, args.zplus)
    out = _sweep(_decompose_one, _t_values(args), args.jobs, args.n, spec, args.l, args.seed)
    warnings = [w for _, ws, _ in out for w in ws]
    status = EXIT_MISMATCH if any(bad for _, _, bad in out) else EXIT_OK
    return {"reports": [r for r, _, _ in out]}, warnings, status


# plumbing --------------------------------------------------------------------------


def _add_t(sp):
    sp.add_argument("--t", type=int, help="specialization parameter")
    sp.add_argument("--t-range", metavar="A..B", help="sweep t over A..B inclusive")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes for --t-range")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rikuna", description="Rikuna polynomials, indices and dynamics.")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized factorization (env RIKUNA_SEED)")
    parser.add_argument("--verbose", action="store_true", help="also log warnings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poly", help="coefficients of r_n(x, t)")
    sp.add_argument("--n", type=int, required=True)
    _add_t(sp)
    sp.add_argument("--l", type=int, default=3, help="odd prime ell (default 3)")
    sp.add_argument("--mod", type=int, help="reduce modulo this prime")
    sp.add_argument("--k", type=int, default=1, help="residue degree, field F_{mod^k}")
    sp.add_argument("--zplus", type=int, help="residue of zeta+ (needed for ell > 3)")
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("disc", help="discriminant of r_n and of its field (ell = 3)")
    sp.add_argument("--n", type=int, required=True)
    _add_t(sp)
    sp.set_defaults(func=cmd_disc)

    sp = sub.add_parser("index", help="index of Z[theta] in the maximal order (ell = 3)")
    sp.add_argument("--n", type=int, required=True)
    _add_t(sp)
    sp.add_argument("--p", type=int, help="only this prime")
    sp.add_argument("--check", action="store_true", help="recompute with Newton polygons")
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("graph", help="graph of phi on PF_q")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--l", type=int, default=3)
    sp.add_argument("--census", action="store_true", help="cycle census (default when --dot is absent)")
    sp.add_argument("--dot", metavar="PATH", help="write the graph in DOT format")
    sp.add_argument("--zplus", type=int, help="residue of zeta+ when q is not 1 mod ell")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("decompose", help="factor pattern mod a prime and the primes above it")
    sp.add_argument("--n", type=int, required=True)
    _add_t(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--zplus", type=int)
    sp.add_argument("--l", type=int, default=3)
    sp.set_defaults(func=cmd_decompose)
    return parser


def _params(args) -> dict:
    skip = {"func", "verbose", "jobs", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def render(envelope: dict) -> str:
    return json.dumps(envelope, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    if args.seed is None and os.environ.get("RIKUNA_SEED"):
        try:
            args.seed = int(os.environ["RIKUNA_SEED"])
        except ValueError:
            parser.error(f"RIKUNA_SEED={os.environ['RIKUNA_SEED']!r} is not an integer")
    envelope = {"command": args.command, "parameters": _canon(_params(args))}
    try:
        results, warnings, status = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"rikuna {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        results, warnings, status = None, [str(exc)], EXIT_IO
    except (ValueError, ArithmeticError) as exc:
        results, warnings, status = None, [f"precondition failed: {exc}"], EXIT_PRECONDITION
    envelope.update(results=_canon(results), warnings=warnings, status=status)
    sys.stdout.write(render(envelope))
    return status


if __name__ == "__main__":
    sys.exit(main())
