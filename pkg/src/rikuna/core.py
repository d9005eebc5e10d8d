"""Rikuna polynomials r_n = P_n - t*Q_n and the map phi = P/Q.

Over Z only ell = 3 is available (there zeta+ = -1 and everything is
integral).  For any odd prime ell the polynomials are built over a finite
field from the image of zeta+ (the trace zeta + 1/zeta), which may sit in
F_q even when zeta itself does not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arith import is_prime, u_seq
from .finite_field import (
    INF,
    FieldCtx,
    FqElem,
    FqPoly,
    Infinity,
    find_zeta,
    make_field,
    zeta_from_zeta_plus,
)
from .zpoly import ZPoly


# integer construction, ell = 3 ------------------------------------------------


def rikuna_z3(n: int, t: int) -> ZPoly:
    """r_n(x, t; 3) from the binomial sum with the period-6 table u_k = U_k(1)."""
    if n < 0:
        raise ValueError(f"level n={n} must be >= 0")
    if n == 0:
        return ZPoly((-t, 1))
    N = 3**n
    return ZPoly(comb(N, k) * (t * u_seq(k + 2) - u_seq(k)) for k in range(N + 1))


def pq_z3(n: int) -> tuple[ZPoly, ZPoly]:
    """(P_n, Q_n) over Z for ell = 3, read off the same binomial sum."""
    if n < 0:
        raise ValueError(f"level n={n} must be >= 0")
    if n == 0:
        return ZPoly((0, 1)), ZPoly((1,))
    N = 3**n
    P = ZPoly(-comb(N, k) * u_seq(k) for k in range(N + 1))
    Q = ZPoly(-comb(N, k) * u_seq(k + 2) for k in range(N + 1))
    return P, Q


def pq_z3_composed(n: int) -> tuple[ZPoly, ZPoly]:
    """(P_n, Q_n) by iterating the homogenized level-one map.

    Independent of the binomial sum; used to check it.
    """
    if n < 0:
        raise ValueError(f"level n={n} must be >= 0")
    P1, Q1 = ZPoly((-1, -3, 0, 1)), ZPoly((0, 3, 3))
    P, Q = ZPoly((0, 1)), ZPoly((1,))
    for _ in range(n):
        P, Q = P1.homogeneous_eval(P, Q, 3), Q1.homogeneous_eval(P, Q, 3)
    return P, Q


def rikuna_z3_composed(n: int, t: int) -> ZPoly:
    P, Q = pq_z3_composed(n)
    return P - Q * t


# finite-field construction, any odd prime ell ----------------------------------


def chebyshev_u(ctx: FieldCtx, s: int, m: int) -> list[int]:
    """Codes of U_{-1}(s), U_0(s), ..., U_m(s) (so entry j is U_{j-1})."""
    out = [0, 1]
    for _ in range(m):
        out.append(ctx.sub(ctx.mul(s, out[-1]), out[-2]))
    return out


@dataclass(frozen=True)
class PQPair:
    n: int
    ell: int
    P: FqPoly
    Q: FqPoly


class RikunaMap:
    """phi(x; ell) over F_q, fixed by the residue of zeta+ (and zeta if rational).

    Give either ``zeta`` (an element of order ell) or ``zplus``.  With
    neither, ell = 3 uses zeta+ = -1 and other ell require q = 1 mod ell so
    that the canonical zeta can be found.
    """

    def __init__(self, ctx: FieldCtx, ell: int, zplus=None, zeta=None):
        if ell < 3 or ell % 2 == 0 or not is_prime(ell):
            raise ValueError(f"ell={ell} must be an odd prime")
        if ctx.p == ell:
            raise ValueError(f"residue characteristic {ctx.p} equals ell; the map degenerates")
        self.ctx, self.ell = ctx, ell
        self.zeta = self.zeta_inv = None
        if zeta is not None:
            z = zeta if isinstance(zeta, FqElem) else ctx(zeta)
            if ctx.order(z.code) != ell:
                raise ValueError(f"zeta={z} does not have order {ell}")
            self.zeta, self.zeta_inv = z, z.inverse()
            zp = z + self.zeta_inv
        elif zplus is not None:
            zp = zplus if isinstance(zplus, FqElem) else ctx(zplus)
            if (ctx.q - 1) % ell == 0:
                self.zeta, self.zeta_inv = zeta_from_zeta_plus(ctx, zp, ell)
        elif ell == 3:
            zp = ctx(-1)
            if (ctx.q - 1) % 3 == 0:
                self.zeta, self.zeta_inv = find_zeta(ctx, 3)
        else:
            self.zeta, self.zeta_inv = find_zeta(ctx, ell)
            zp = self.zeta + self.zeta_inv
        self.zplus = zp
        if self.zeta is None:
            _check_trace(ctx, zp.code, ell)
        self._pq_cache = {}
        self.P1, self.Q1 = self.pq(1)
        self._P1c = list(self.P1.coeffs)
        self._Q1c = list(self.Q1.coeffs)

    def __repr__(self):
        return f"RikunaMap(F_{self.ctx.q}, ell={self.ell}, zplus={self.zplus})"

    def _chebyshev_pq(self, n: int) -> tuple[FqPoly, FqPoly]:
        ctx = self.ctx
        N = self.ell**n
        U = chebyshev_u(ctx, self.zplus.code, N)
        P = [0] * (N + 1)
        Q = [0] * (N + 1)
        P[N] = 1
        Q[N - 1] = ctx.from_int(N)
        c = N  # C(N, k), updated exactly
        for k in range(2, N + 1):
            c = c * (N - k + 1) // k
            b = ctx.from_int(c)
            if k % 2:
                b = ctx.neg(b)
            # coefficient of x^(N-k): -(-1)^k C(N,k) U_{k-2} and U_{k-1}
            P[N - k] = ctx.neg(ctx.mul(b, U[k - 1]))
            Q[N - k] = ctx.neg(ctx.mul(b, U[k]))
        return FqPoly(ctx, P), FqPoly(ctx, Q)

    def pq(self, n: int) -> tuple[FqPoly, FqPoly]:
        """(P_n, Q_n) over F_q from the Chebyshev expansion in zeta+."""
        if n < 0:
            raise ValueError(f"level n={n} must be >= 0")
        if n == 0:
            return FqPoly(self.ctx, [0, 1]), FqPoly(self.ctx, [1])
        if n not in self._pq_cache:
            self._pq_cache[n] = self._chebyshev_pq(n)
        return self._pq_cache[n]

    def pq_closed(self, n: int) -> tuple[FqPoly, FqPoly]:
        """(P_n, Q_n) from the two powers (x - zeta)^N and (x - 1/zeta)^N."""
        if self.zeta is None:
            raise ValueError("zeta is not rational over F_q")
        ctx = self.ctx
        N = self.ell**n
        z, zi = self.zeta, self.zeta_inv
        a = FqPoly(ctx, [(-z).code, 1]) ** N
        b = FqPoly(ctx, [(-zi).code, 1]) ** N
        scale = (zi - z).inverse()
        P = (a * zi - b * z) * scale
        Q = (a - b) * scale
        return P, Q

    def pq_composed(self, n: int) -> tuple[FqPoly, FqPoly]:
        """(P_n, Q_n) by iterating the degree-ell homogenization of (P, Q)."""
        ctx = self.ctx
        P, Q = FqPoly(ctx, [0, 1]), FqPoly(ctx, [1])
        for _ in range(n):
            P, Q = (
                _homogeneous(self._P1c, P, Q, self.ell),
                _homogeneous(self._Q1c, P, Q, self.ell),
            )
        return P, Q

    def r(self, n: int, t) -> FqPoly:
        P, Q = self.pq(n)
        return P - Q * self._elem(t)

    def _elem(self, t) -> FqElem:
        return t if isinstance(t, FqElem) else self.ctx(t)

    # the map on the projective line ----------------------------------------

    def phi_code(self, c: int) -> int:
        """phi on PF_q indexed by codes, with q standing for infinity."""
        ctx = self.ctx
        if c == ctx.q:
            return c
        num = den = 0
        for a in reversed(self._P1c):
            num = ctx.add(ctx.mul(num, c), a)
        for a in reversed(self._Q1c):
            den = ctx.add(ctx.mul(den, c), a)
        if den == 0:
            return ctx.q
        return ctx.div(num, den)

    def phi(self, a):
        if isinstance(a, Infinity):
            return INF
        code = self.phi_code(self._elem(a).code)
        return INF if code == self.ctx.q else FqElem(self.ctx, code)

    def successor_table(self) -> list[int]:
        """phi on every point of PF_q (codes 0..q-1, then q for infinity)."""
        return [self.phi_code(c) for c in range(self.ctx.q + 1)]


def _check_trace(ctx: FieldCtx, s: int, ell: int) -> None:
    """s must be zeta + 1/zeta for some zeta of order ell (possibly in F_{q^2}).

    With V_j = zeta^j + zeta^-j, zeta has order ell exactly when
    1 + V_1 + ... + V_{(ell-1)/2} = 0.
    """
    prev, cur = ctx.from_int(2), s
    total = ctx.add(1, s)
    for _ in range((ell - 1) // 2 - 1):
        prev, cur = cur, ctx.sub(ctx.mul(s, cur), prev)
        total = ctx.add(total, cur)
    if total != 0:
        raise ValueError(f"zplus={FqElem(ctx, s)} is not an {ell}-th trace")


def _homogeneous(coeffs: list[int], P: FqPoly, Q: FqPoly, degree: int) -> FqPoly:
    ctx = P.ctx
    acc = FqPoly(ctx, [])
    qpows = [FqPoly(ctx, [1])]
    for _ in range(degree):
        qpows.append(qpows[-1] * Q)
    ppow = FqPoly(ctx, [1])
    for i in range(degree + 1):
        c = coeffs[i] if i < len(coeffs) else 0
        if c:
            acc = acc + ppow * qpows[degree - i] * FqElem(ctx, c)
        if i < degree:
            ppow = ppow * P
    return acc


def pq_pair(n: int, rmap: RikunaMap) -> PQPair:
    """(P_n, Q_n) computed in closed form and by composition, checked equal."""
    if rmap.zeta is None:
        raise ValueError("pq_pair needs zeta in the coefficient field")
    P, Q = rmap.pq_closed(n)
    Pc, Qc = rmap.pq_composed(n)
    if (P, Q) != (Pc, Qc):
        raise AssertionError(f"closed form and composition disagree at n={n}")
    return PQPair(n, rmap.ell, P, Q)


def phi_eval(a, rmap: RikunaMap):
    return rmap.phi(a)


@dataclass(frozen=True)
class ReductionReport:
    applicable: bool
    holds: bool | None
    case: str
    detail: str = ""


def reduction_check(n: int, t: int, p: int, ell: int = 3, zplus=None, k: int = 1) -> ReductionReport:
    """Check the two degenerate reductions of r_n by exact expansion.

    * p = ell = 3: r_n(x, t; 3) = (x - 1)^(3^n) mod 3.
    * t = zeta^(+-1) modulo a prime of residue field F_{p^k}:
      r_n = (x - t)^(ell^n) there.

    Anything else is reported as inapplicable.
    """
    if ell == 3 and p == 3:
        r = rikuna_z3(n, t)
        target = ZPoly((-1, 1)) ** (3**n)
        holds = r.reduce(3) == target.reduce(3)
        return ReductionReport(True, holds, "mod 3", f"r_{n} vs (x-1)^{3**n}")
    ctx = make_field(p, k)
    if (ctx.q - 1) % ell:
        return ReductionReport(False, None, "inapplicable", f"q={ctx.q} is not 1 mod {ell}")
    rmap = RikunaMap(ctx, ell, zplus=zplus)
    tt = ctx(t)
    if tt not in (rmap.zeta, rmap.zeta_inv):
        return ReductionReport(False, None, "inapplicable", f"t={tt} is not zeta^(+-1) in F_{ctx.q}")
    if ell == 3 and k == 1:
        r = FqPoly.from_ints(ctx, rikuna_z3(n, t).coeffs)
    else:
        r = rmap.r(n, tt)
    target = FqPoly(ctx, [(-tt).code, 1]) ** (ell**n)
    return ReductionReport(True, r == target, "t = zeta", f"r_{n} vs (x-{tt})^{ell**n} in F_{ctx.q}")


__all__ = [
    "PQPair",
    "ReductionReport",
    "RikunaMap",
    "chebyshev_u",
    "phi_eval",
    "pq_pair",
    "pq_z3",
    "pq_z3_composed",
    "reduction_check",
    "rikuna_z3",
    "rikuna_z3_composed",
]
