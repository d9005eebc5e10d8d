"""Closed forms for ell = 3 over Q: disc r_n, the indices at 3 and at the
primes dividing t^2 + t + 1, and the field discriminant that follows.

N = 3^n throughout.  Each formula here is checked in the test-suite against
an independent computation (resultants, lattice counts from ``montes``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd

from .arith import FactoredInt, INFINITE, e_table, factorint, is_prime, val_p
from .core import rikuna_z3
from .montes import lower_hull
from .zpoly import ZPoly, discriminant


class Inapplicable(ValueError):
    """The hypotheses of a formula do not hold for these parameters."""


def norm_t(t: int) -> int:
    """t^2 + t + 1, the norm of t - zeta for ell = 3."""
    return t * t + t + 1


def _level(n: int) -> int:
    if n < 1:
        raise ValueError(f"level n={n} must be >= 1")
    return 3**n


# discriminants --------------------------------------------------------------


def disc_resultant_oracle(f: ZPoly) -> int:
    """disc f = (-1)^(d(d-1)/2) Res(f, f') for monic f, by subresultants."""
    if not f.is_monic():
        raise ValueError("the oracle expects a monic polynomial")
    return discriminant(f)


@lru_cache(maxsize=512)
def _disc_sign(n: int, t: int) -> int:
    d = disc_resultant_oracle(rikuna_z3(n, t))
    return (d > 0) - (d < 0)


def disc3_exponent(n: int) -> int:
    """Power of 3 coming from ell^(n ell^n) (zeta - 1/zeta)^((N-2)(N-1))."""
    N = _level(n)
    return n * N + (N - 2) * (N - 1) // 2


def disc_rn_closed(n: int, t: int) -> tuple[int, FactoredInt]:
    """(sign, |disc r_n(x, t; 3)|) with the magnitude in factored form.

    |disc| = 3^(n N + (N-2)(N-1)/2) (t^2+t+1)^(N-1); the sign comes from
    the resultant oracle because the closed form only fixes it up to +-.
    """
    N = _level(n)
    base = factorint(norm_t(t))
    exps = {3: disc3_exponent(n)}
    for p, e in base.factors:
        exps[p] = exps.get(p, 0) + e * (N - 1)
    mag = FactoredInt(1, tuple(sorted(exps.items())), base.cofactor ** (N - 1))
    return _disc_sign(n, t), mag


# Taylor coefficients at x = 1 -------------------------------------------------


@dataclass(frozen=True)
class Coeff3:
    n: int
    m: int
    t: int
    value: int

    @property
    def valuation(self):
        return val_p(self.value, 3)


@lru_cache(maxsize=256)
def _taylor_at_one(n: int, t: int) -> ZPoly:
    return rikuna_z3(n, t).shift(1)


def coeff_a(n: int, m: int, t: int) -> Coeff3:
    """a_{n,m}: the coefficient of (x - 1)^m in r_n(x, t; 3).

    Taken from the Taylor shift of r_n; for 0 < m < N the magnitude is also
    checked against C(N, m) 3^floor((N-m)/2) |e_m(t)|.
    """
    N = _level(n)
    if not 0 <= m <= N:
        raise ValueError(f"m={m} outside [0, {N}]")
    value = _taylor_at_one(n, t)[m]
    if 0 < m < N:
        expected = comb(N, m) * 3 ** ((N - m) // 2) * abs(e_table(m, t))
        if abs(value) != expected:
            raise AssertionError(f"a_{{{n},{m}}}({t}) = {value}, product form gives +-{expected}")
    return Coeff3(n, m, t, value)


def x_minus_1_polygon(n: int, t: int) -> list[tuple[int, int]]:
    """Predicted vertices of the principal (x-1)-polygon of r_n at 3, t = 1 mod 3.

    Lower hull of (0, v_3(a_{n,0})) and the odd abscissae 3^k, 0 <= k <= n,
    at height n - k + (N - 3^k)/2.
    """
    N = _level(n)
    if t % 3 != 1:
        raise Inapplicable("the shape prediction is for t = 1 mod 3")
    pts = [(0, coeff_a(n, 0, t).valuation)]
    pts += [(3**k, n - k + (N - 3**k) // 2) for k in range(n + 1)]
    hull = lower_hull(pts)
    out = [hull[0]]
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        out.append(b)
    return out


# indices ----------------------------------------------------------------------


@dataclass(frozen=True)
class Index3Result:
    n: int
    t: int
    V: int
    E: int
    branch: str  # "t=1 mod 3" or "otherwise"

    @property
    def ind3(self) -> int:
        return self.E // 4


def ind3_closed(n: int, t: int) -> Index3Result:
    N = _level(n)
    if t % 3 == 1:
        a0 = coeff_a(n, 0, t).valuation
        if a0 == INFINITE:
            V = n
        else:
            V = min(a0 - (N + 1) // 2, n)
        if V < 0:
            raise AssertionError(f"v_3(a_(n,0)) = {a0} below (N+1)/2 for t = 1 mod 3")
        E = (N - 1) ** 2 + 2 * V + 2 * sum(3 ** (n - k) for k in range(V))
        branch = "t=1 mod 3"
    else:
        V = 0
        E = (N - 1) * (N - 3)
        branch = "otherwise"
    if E % 4:
        raise AssertionError(f"E={E} is not divisible by 4")
    return Index3Result(n, t, V, E, branch)


def indp_closed(n: int, t: int, p: int) -> int:
    """v_p(ind r_n) for a prime p != 3 dividing t^2 + t + 1."""
    N = _level(n)
    if not is_prime(p):
        raise ValueError(f"p={p} is not a prime")
    if p == 3:
        raise Inapplicable("use ind3_closed for p = 3")
    v = val_p(norm_t(t), p)
    if v == 0:
        raise Inapplicable(f"{p} does not divide t^2+t+1 = {norm_t(t)}")
    return ((N - 1) * (v - 1) + gcd(N, v) - 1) // 2


def index_closed(n: int, t: int) -> FactoredInt:
    """ind r_n(x, t; 3) assembled prime by prime.

    Only primes found in t^2 + t + 1 contribute; callers needing certainty
    should check that its factorization is complete.
    """
    exps = {}
    i3 = ind3_closed(n, t).ind3
    if i3:
        exps[3] = i3
    base = factorint(norm_t(t))
    for p, _ in base.factors:
        if p != 3:
            e = indp_closed(n, t, p)
            if e:
                exps[p] = e
    return FactoredInt(1, tuple(sorted(exps.items())))


# field discriminant -------------------------------------------------------------


@dataclass
class PrimeDisc:
    p: int
    nu_disc_r: int
    ind: int
    nu_disc_K: int
    printed: int | None

    @property
    def agrees(self) -> bool:
        return self.printed is None or self.printed == self.nu_disc_K


@dataclass
class DiscReport:
    n: int
    t: int
    sign: int
    disc_r: FactoredInt
    primes: list[PrimeDisc] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.disc_r.complete

    def nu_disc_K(self, p: int) -> int:
        for pd in self.primes:
            if pd.p == p:
                return pd.nu_disc_K
        return 0

    def disc_K(self) -> FactoredInt:
        facs = tuple((pd.p, pd.nu_disc_K) for pd in self.primes if pd.nu_disc_K)
        return FactoredInt(self.sign, facs, self.disc_r.cofactor)

    def printed_disc_K(self) -> FactoredInt | None:
        """The printed closed form, or None when it has a negative exponent."""
        if any(pd.printed is not None and pd.printed < 0 for pd in self.primes):
            return None
        facs = tuple((pd.p, pd.printed) for pd in self.primes if pd.printed)
        return FactoredInt(self.sign, facs, self.disc_r.cofactor)

    @property
    def discrepancies(self) -> list[int]:
        return [pd.p for pd in self.primes if not pd.agrees]


def field_disc(n: int, t: int) -> DiscReport:
    """v_p(disc K_n) = v_p(disc r_n) - 2 v_p(ind r_n), next to the printed
    closed form 3^(n N - E/2) prod p^(N - gcd(N, v_p)).

    The prime 3 is taken wholly from the E term, even when 3 | t^2+t+1.
    """
    N = _level(n)
    sign, mag = disc_rn_closed(n, t)
    report = DiscReport(n, t, sign, mag)
    if not mag.complete:
        report.warnings.append(
            f"t^2+t+1 has an unfactored composite cofactor {factorint(norm_t(t)).cofactor}; "
            "primes hidden in it are not reported"
        )
    i3 = ind3_closed(n, t)
    nu3 = mag.exponent(3)
    report.primes.append(PrimeDisc(3, nu3, i3.ind3, nu3 - 2 * i3.ind3, n * N - i3.E // 2))
    for p in mag.primes():
        if p == 3:
            continue
        ip = indp_closed(n, t, p)
        v = val_p(norm_t(t), p)
        nu = mag.exponent(p)
        report.primes.append(PrimeDisc(p, nu, ip, nu - 2 * ip, N - gcd(N, v)))
    for pd in report.primes:
        if not pd.agrees:
            report.warnings.append(
                f"printed field discriminant gives {pd.p}^{pd.printed}, "
                f"disc r_n / ind^2 gives {pd.p}^{pd.nu_disc_K}"
            )
    return report


__all__ = [
    "Coeff3",
    "DiscReport",
    "Inapplicable",
    "Index3Result",
    "PrimeDisc",
    "coeff_a",
    "disc3_exponent",
    "disc_resultant_oracle",
    "disc_rn_closed",
    "field_disc",
    "ind3_closed",
    "index_closed",
    "indp_closed",
    "norm_t",
    "x_minus_1_polygon",
]
