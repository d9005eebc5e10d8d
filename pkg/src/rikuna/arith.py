"""Exact integer helpers: valuations, factoring and the periodic tables.

Everything here works on Python ints, so nothing is ever rounded.  The
valuation of zero is ``INFINITE`` (``math.inf``), which compares above every
integer and lets polygon code drop absent coefficients naturally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import gmpy2

INFINITE = math.inf

_U_PERIOD = (1, 1, 0, -1, -1, 0)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


def require_prime(p: int, name: str = "p") -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{name}={p!r} is not a prime")


def val_p(x, p: int):
    """Return the p-adic valuation of an integer or an integer polynomial.

    Polynomials (anything exposing ``coeffs`` or a plain sequence of ints)
    get the minimum valuation over their coefficients.  Zero gives INFINITE.
    """
    require_prime(p)
    if isinstance(x, int):
        if x == 0:
            return INFINITE
        return int(gmpy2.remove(x, p)[1])
    coeffs = getattr(x, "coeffs", x)
    best = INFINITE
    for c in coeffs:
        if c:
            v = int(gmpy2.remove(c, p)[1])
            if v < best:
                best = v
                if v == 0:
                    break
    return best


def binom_val3(n: int, m: int) -> int:
    """3-adic valuation of C(3^n, m) for 0 < m < 3^n, i.e. n - v_3(m)."""
    if not 0 < m < 3**n:
        raise ValueError(f"m={m} outside (0, 3^{n})")
    return n - val_p(m, 3)


def u_seq(m: int) -> int:
    """U_m(1) for the Chebyshev polynomials of the second kind (period 6)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _U_PERIOD[m % 6]


def e_table(m: int, t: int) -> int:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return (2 * t + 1, t, t - 1, 1, t + 2, t + 1)[m % 6]


def ord_mod(a: int, n: int) -> int:
    """Multiplicative order of a modulo n (n >= 1, gcd(a, n) = 1)."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    phi = totient(n)
    order = phi
    for r, _ in factorint(phi).factors:
        while order % r == 0 and pow(a, order // r, n) == 1:
            order //= r
    return order


def totient(n: int) -> int:
    result = n
    for r, _ in factorint(n).factors:
        result = result // r * (r - 1)
    return result


def divisors(n: int) -> list[int]:
    divs = [1]
    for r, e in factorint(n).factors:
        divs = [d * r**i for d in divs for i in range(e + 1)]
    return sorted(divs)


@dataclass(frozen=True)
class FactoredInt:
    """sign * prod(p**e) * cofactor.

    ``cofactor`` is 1 for a complete factorization; otherwise it is a
    composite that resisted the search and must not be read as prime.
    """

    sign: int
    factors: tuple[tuple[int, int], ...] = ()
    cofactor: int = 1
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError("factors must have increasing primes and positive exponents")
        object.__setattr__(self, "_index", dict(self.factors))

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def exponent(self, p: int) -> int:
        return self._index.get(p, 0)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors:
            v *= p**e
        return v

    def __str__(self):
        if self.sign == 0:
            return "0"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if not self.complete:
            parts.append(f"[{self.cofactor}]")
        body = " * ".join(parts) or "1"
        return ("-" if self.sign < 0 else "") + body


def _rho(n: int, seed: int, max_steps: int) -> int | None:
    """Brent's variant of Pollard rho; returns a proper factor or None."""
    y, c, m = seed % n, (seed * 7 + 1) % n or 1, 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > max_steps:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factorint(n: int, trial_bound: int = 10_000, rho_steps: int = 2_000_000) -> FactoredInt:
    """Factor n by trial division then Pollard rho.

    Composite pieces the rho search cannot split within its budget end up in
    ``cofactor`` instead of being reported as primes.
    """
    if n == 0:
        return FactoredInt(0)
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict[int, int] = {}

    def add(p, e=1):
        found[p] = found.get(p, 0) + e

    for p in (2, 3, 5):
        while n % p == 0:
            add(p)
            n //= p
    d, inc = 7, 4
    while d * d <= n and d <= trial_bound:
        while n % d == 0:
            add(d)
            n //= d
        d += inc
        inc = 6 - inc
    cofactor = 1
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            add(m)
            continue
        root, exact = gmpy2.iroot(m, 2)
        if exact:
            stack.extend([int(root), int(root)])
            continue
        piece = None
        for seed in range(2, 12):
            piece = _rho(m, seed, rho_steps)
            if piece:
                break
        if piece is None:
            cofactor *= m
        else:
            stack.extend([piece, m // piece])
    return FactoredInt(sign, tuple(sorted(found.items())), cofactor)
