"""Dense polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from math import comb, gcd
from functools import reduce


class ZPoly:
    """Immutable dense polynomial over Z; ``coeffs[i]`` multiplies x**i.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def from_roots(cls, roots):
        f = cls((1,))
        for r in roots:
            f = f * cls((-r, 1))
        return f

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ZPoly((other,))
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def _coerce(self, other):
        if isinstance(other, ZPoly):
            return other
        if isinstance(other, int):
            return ZPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ZPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return ZPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ZPoly([a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ZPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_monic(self, b: ZPoly) -> tuple[ZPoly, ZPoly]:
        """Exact division with remainder by a monic polynomial."""
        if not b.is_monic():
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        db = b.degree
        if len(r) - 1 < db:
            return ZPoly(), ZPoly(r)
        q = [0] * (len(r) - db)
        bc = b.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                q[i - db] = c
                for j in range(db):
                    r[i - db + j] -= c * bc[j]
            r[i] = 0
        return ZPoly(q), ZPoly(r[:db])

    def __divmod__(self, b):
        return self.divmod_monic(b)

    def __floordiv__(self, b):
        return self.divmod_monic(b)[0]

    def __mod__(self, b):
        if isinstance(b, int):
            return ZPoly([a % b for a in self.coeffs])
        return self.divmod_monic(b)[1]

    def exact_div(self, c: int) -> ZPoly:
        out = []
        for a in self.coeffs:
            q, r = divmod(a, c)
            if r:
                raise ArithmeticError(f"{c} does not divide {self}")
            out.append(q)
        return ZPoly(out)

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def derivative(self) -> ZPoly:
        return ZPoly([i * a for i, a in enumerate(self.coeffs)][1:])

    def shift(self, c: int) -> ZPoly:
        """Return f(x + c), i.e. the Taylor coefficients of f at c."""
        out = list(self.coeffs)
        n = len(out)
        # repeated synthetic division (Horner) in O(n^2) big-int ops
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                out[j] += c * out[j + 1]
        return ZPoly(out)

    def compose(self, g: ZPoly) -> ZPoly:
        acc = ZPoly()
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def homogeneous_eval(self, num: ZPoly, den: ZPoly, degree: int) -> ZPoly:
        """den**degree * self(num/den) for ``degree >= self.degree``."""
        acc = ZPoly()
        powers = [ZPoly((1,))]
        for _ in range(degree):
            powers.append(powers[-1] * den)
        num_pow = ZPoly((1,))
        for i in range(degree + 1):
            c = self[i]
            if c:
                acc = acc + num_pow * powers[degree - i] * c
            if i < degree:
                num_pow = num_pow * num
        return acc

    def reduce(self, p: int) -> list[int]:
        """Coefficients reduced to least nonnegative residues mod p (trimmed)."""
        out = [a % p for a in self.coeffs]
        while out and out[-1] == 0:
            out.pop()
        return out


def binomial_power(c: int, n: int) -> ZPoly:
    """(x - c)**n expanded directly from binomial coefficients."""
    return ZPoly([comb(n, k) * (-c) ** (n - k) for k in range(n + 1)])


def pseudo_remainder(a: ZPoly, b: ZPoly) -> ZPoly:
    """lc(b)**(deg a - deg b + 1) * a mod b, computed without fractions."""
    r = list(a.coeffs)
    db, lb, bc = b.degree, b.lc, b.coeffs
    e = len(r) - db
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * bc[j]
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    out = ZPoly(r)
    return out * lb**e if e > 0 else out


def resultant(a: ZPoly, b: ZPoly) -> int:
    """Res(a, b) by the subresultant polynomial remainder sequence."""
    if a.is_zero() or b.is_zero():
        return 0
    s = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            s = -1
    if b.degree == 0:
        return s * b.lc**a.degree
    ca, cb = a.content(), b.content()
    a, b = a.exact_div(ca), b.exact_div(cb)
    t = ca**b.degree * cb**a.degree
    g = h = 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            s = -s
        r = pseudo_remainder(a, b)
        a = b
        if r.is_zero():
            return 0
        div = g * h**delta
        b = r.exact_div(div)
        g = a.lc
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if b.degree == 0:
            break
    da = a.degree
    if da == 0:
        h = 1
    elif da == 1:
        h = b.lc
    else:
        h = b.lc**da // h ** (da - 1)
    return s * t * h


def discriminant(f: ZPoly) -> int:
    """disc f = (-1)^(d(d-1)/2) Res(f, f') / lc(f), exactly."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    res = resultant(f, f.derivative())
    q, r = divmod(res, f.lc)
    if r:
        raise ArithmeticError("resultant not divisible by leading coefficient")
    return -q if (d * (d - 1) // 2) % 2 else q
