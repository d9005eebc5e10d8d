"""Dynamics of phi(x; ell) on the projective line over F_q.

The substitution beta_a = (a - zeta) / (a - 1/zeta) turns phi into the power
map b -> b^ell on F_q(zeta)^*, so the tail and cycle length of a point are
read off the multiplicative order of beta_a.  Everything here can also be
checked by plain iteration, and the test-suite does so.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field

from . import kernels
from .arith import divisors, is_prime, ord_mod, require_prime, totient, val_p
from .core import RikunaMap
from .finite_field import INF, FqElem, Infinity, QuadExt, field_of_order, find_zeta


def _split_ell(m: int, ell: int) -> tuple[int, int]:
    """m = ell^lam * d with ell not dividing d; returns (lam, d)."""
    lam = 0
    while m % ell == 0:
        m //= ell
        lam += 1
    return lam, m


def _is_fixed_zeta(a, rmap: RikunaMap) -> bool:
    return rmap.zeta is not None and isinstance(a, FqElem) and a in (rmap.zeta, rmap.zeta_inv)


def _as_point(a, rmap: RikunaMap):
    if isinstance(a, (Infinity, FqElem)):
        return a
    if a is None:
        return INF
    return rmap.ctx(a)


# beta --------------------------------------------------------------------------


def _quad(rmap: RikunaMap) -> QuadExt:
    ext = getattr(rmap, "_quad_ext", None)
    if ext is None:
        ext = QuadExt(rmap.ctx, rmap.zplus.code)
        rmap._quad_ext = ext
    return ext


def beta_map(a, rmap: RikunaMap):
    """beta_a = (a - zeta) / (a - 1/zeta), with beta_inf = 1.

    Lives in F_q when zeta is rational (an FqElem), otherwise in the
    quadratic extension F_q(zeta) as a pair (u, v) meaning u + v*zeta.
    """
    a = _as_point(a, rmap)
    if rmap.zeta is not None:
        ctx = rmap.ctx
        if isinstance(a, Infinity):
            return ctx(1)
        if _is_fixed_zeta(a, rmap):
            raise ValueError(f"beta is undefined at the fixed point {a}")
        return (a - rmap.zeta) / (a - rmap.zeta_inv)
    ext = _quad(rmap)
    if isinstance(a, Infinity):
        return ext.one
    f = rmap.ctx
    # y plays zeta, and 1/zeta = s - y
    num = (a.code, f.neg(1))
    den = (f.sub(a.code, ext.s), 1)
    return ext.div(num, den)


def _beta_order(beta, rmap: RikunaMap) -> int:
    if isinstance(beta, FqElem):
        return rmap.ctx.order(beta.code)
    return _quad(rmap).order(beta)


def beta_power(beta, e: int, rmap: RikunaMap):
    """beta^e in whichever field beta lives in."""
    if isinstance(beta, FqElem):
        return beta**e
    return _quad(rmap).pow(beta, e)


# orbits ------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitInfo:
    a: object
    beta_order: int | None  # None at the two fixed points zeta, 1/zeta
    pper: int
    per: int
    weight: int = 1


def orbit_stats(a, rmap: RikunaMap) -> OrbitInfo:
    """Preperiod and period of a point from the order of beta_a.

    If ord beta_a = ell^lam * d with ell not dividing d, the point has
    preperiod lam and lands on a cycle of length ord_d(ell).
    """
    a = _as_point(a, rmap)
    if _is_fixed_zeta(a, rmap):
        return OrbitInfo(a, None, 0, 1)
    m = _beta_order(beta_map(a, rmap), rmap)
    lam, d = _split_ell(m, rmap.ell)
    return OrbitInfo(a, m, lam, ord_mod(rmap.ell, d))


def orbit_by_iteration(a, rmap: RikunaMap) -> tuple[int, int]:
    """(pper, per) by iterating phi and marking visited points."""
    a = _as_point(a, rmap)
    seen = {}
    step = 0
    while a not in seen:
        seen[a] = step
        a = rmap.phi(a)
        step += 1
    first = seen[a]
    return first, step - first


def census_from_orbits(rmap: RikunaMap) -> Counter:
    """Histogram {(pper, per): count} over PF_q via orbit_stats."""
    ctx = rmap.ctx
    out = Counter()
    for c in range(ctx.q):
        info = orbit_stats(ctx.elem(c), rmap)
        out[info.pper, info.per] += 1
    info = orbit_stats(INF, rmap)
    out[info.pper, info.per] += 1
    return out


def census_from_iteration(rmap: RikunaMap) -> Counter:
    """The same histogram, from the functional graph of phi."""
    tail, cyc = kernels.functional_graph(rmap.successor_table())
    return Counter(zip(tail, cyc))


# the structure theorem ------------------------------------------------------------


def nu_ell_pow(p: int, k: int, ell: int) -> int:
    """v_ell(p^k - 1) via the order m of p mod ell.

    Equals v_ell(p^m - 1) + v_ell(k) when m | k, and 0 otherwise.  When p^k
    is small enough the direct valuation is computed too and compared.
    """
    require_prime(p)
    require_prime(ell, "ell")
    if ell == 2:
        raise ValueError("ell must be odd")
    if ell == p:
        raise ValueError(f"ell={ell} equals the characteristic; p^k - 1 is never divisible by it")
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    m = ord_mod(p, ell)
    value = 0 if k % m else val_p(p**m - 1, ell) + val_p(k, ell)
    if k * p.bit_length() <= 4096:
        direct = val_p(p**k - 1, ell)
        if direct != value:
            raise AssertionError(f"v_{ell}({p}^{k} - 1) = {direct}, formula gives {value}")
    return value


@dataclass(frozen=True)
class GraphRow:
    divisor: int  # D = d * ell^j, a divisor of q - 1
    count: int  # phi(D) points have ord beta = D
    preperiod: int  # j
    cycle_period: int  # ord_d(ell), the length of the cycle they reach

    @property
    def period(self) -> int | None:
        """Period as tabulated: only the periodic rows (j = 0) carry one."""
        return self.cycle_period if self.preperiod == 0 else None


@dataclass
class GraphSummary:
    q: int
    ell: int
    lam: int
    omega: int
    rows: list[GraphRow]
    tails: dict[int, int]
    fixed_points: tuple

    @property
    def periodic_count(self) -> int:
        return sum(r.count for r in self.rows if r.preperiod == 0)

    @property
    def total(self) -> int:
        return 2 + self.periodic_count + sum(self.tails.values())

    def census(self) -> Counter:
        out = Counter({(0, 1): 2})
        for r in self.rows:
            out[r.preperiod, r.cycle_period] += r.count
        return out


def graph_summary(q: int, ell: int) -> GraphSummary:
    """Cycle structure of phi on PF_q for q = 1 mod ell, from the divisors of q - 1.

    Rows are grouped by the ell-free part d of the divisor, each group
    listing d, d*ell, ..., d*ell^lam; that is the order of the printed
    tables.
    """
    require_prime(ell, "ell")
    if ell == 2:
        raise ValueError("ell must be an odd prime")
    ctx = field_of_order(q)
    if (q - 1) % ell:
        raise ValueError(
            f"q={q} is not 1 mod {ell}; the structure theorem needs zeta in F_q "
            "(iterate with build_graph instead)"
        )
    lam, omega = _split_ell(q - 1, ell)
    rows = []
    for d in divisors(omega):
        per = ord_mod(ell, d)
        for j in range(lam + 1):
            D = d * ell**j
            rows.append(GraphRow(D, totient(D), j, per))
    tails = {k: omega * (ell - 1) * ell ** (k - 1) for k in range(1, lam + 1)}
    summary = GraphSummary(q, ell, lam, omega, rows, tails, find_zeta(ctx, ell))
    if summary.total != q + 1:
        raise AssertionError(f"census counts {summary.total} points, PF_{q} has {q + 1}")
    return summary


# the graph itself --------------------------------------------------------------------


@dataclass
class FunctionalGraph:
    q: int
    ell: int
    rmap: RikunaMap
    succ: list[int]  # node q is infinity
    tail: list[int] = field(repr=False)
    cycle: list[int] = field(repr=False)

    @property
    def nodes(self) -> list[int]:
        return list(range(self.q + 1))

    def label(self, node: int) -> str:
        return "inf" if node == self.q else str(self.rmap.ctx.elem(node))

    def edges(self) -> list[tuple[int, int]]:
        return list(enumerate(self.succ))

    def preimages(self) -> list[list[int]]:
        pre = [[] for _ in self.succ]
        for a, b in enumerate(self.succ):
            pre[b].append(a)
        return pre

    def components(self) -> list[list[int]]:
        """Weakly connected components, each sorted, ordered by least node."""
        parent = list(range(len(self.succ)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in enumerate(self.succ):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[int, list[int]] = {}
        for v in range(len(self.succ)):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())


def build_graph(q: int, ell: int, rmap: RikunaMap | None = None) -> FunctionalGraph:
    """phi on PF_q as a successor list.  Any q with ell != p works here."""
    if rmap is None:
        rmap = RikunaMap(field_of_order(q), ell)
    elif rmap.ctx.q != q or rmap.ell != ell:
        raise ValueError("rmap does not match (q, ell)")
    succ = rmap.successor_table()
    tail, cyc = kernels.functional_graph(succ)
    return FunctionalGraph(q, ell, rmap, succ, list(tail), list(cyc))


def _dot_id(label: str) -> str:
    return '"' + label.replace('"', '\\"') + '"'


def to_dot(graph: FunctionalGraph) -> str:
    """DOT text: one cluster per component, periodic points drawn doubled."""
    rmap = graph.rmap
    special = set()
    if rmap.zeta is not None:
        special = {rmap.zeta.code, rmap.zeta_inv.code}
    lines = [f"digraph phi_{graph.ell}_F{graph.q} {{", "  node [shape=circle];"]
    for i, comp in enumerate(graph.components()):
        lines.append(f"  subgraph cluster_{i} {{")
        for v in comp:
            attrs = []
            if graph.tail[v] == 0:
                attrs.append("shape=doublecircle")
            if v in special:
                attrs.append("style=filled")
            suffix = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f"    {_dot_id(graph.label(v))}{suffix};")
        for v in comp:
            w = graph.succ[v]
            lines.append(f"    {_dot_id(graph.label(v))} -> {_dot_id(graph.label(w))};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(graph: FunctionalGraph, path) -> str:
    text = to_dot(graph)
    try:
        with open(os.fspath(path), "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write DOT file {path}: {exc.strerror or exc}") from exc
    return text


def prime_powers_1_mod(ell: int, bound: int) -> list[int]:
    """Prime powers q <= bound with q = 1 mod ell and q coprime to ell."""
    out = []
    for p in range(2, bound + 1):
        if not is_prime(p) or p == ell:
            continue
        q = p
        while q <= bound:
            if q % ell == 1:
                out.append(q)
            q *= p
    return sorted(out)


__all__ = [
    "FunctionalGraph",
    "GraphRow",
    "GraphSummary",
    "OrbitInfo",
    "beta_map",
    "beta_power",
    "build_graph",
    "census_from_iteration",
    "census_from_orbits",
    "export_dot",
    "graph_summary",
    "nu_ell_pow",
    "orbit_by_iteration",
    "orbit_stats",
    "prime_powers_1_mod",
    "to_dot",
]
