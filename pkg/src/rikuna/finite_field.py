"""Finite fields F_{p^k}, the projective line over them, and F_q[x].

Elements are stored as integer *codes*: the residue c_0 + c_1 a + ... +
c_{k-1} a^{k-1} (a a root of the modulus) has code sum(c_i p^i).  Codes give
the canonical total order on F_q used everywhere a choice must be stable
(the prime subfield is ordered by least nonnegative residue).

Fields with k > 1 and q <= TABLE_LIMIT get exp/log and Zech logarithm
tables so the compiled kernels can run on them; larger extension fields fall
back to polynomial arithmetic on digit lists.
"""

from __future__ import annotations

import random
from functools import lru_cache, total_ordering

import numpy as np

from . import kernels
from .arith import factorint, is_prime, require_prime

TABLE_LIMIT = 1 << 16
DEFAULT_SEED = 20150113


class KernelField:
    """Descriptor handed to the polynomial kernels."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.p = ctx.p
        self.q = ctx.q
        if ctx.k == 1 and ctx.p < 2**31:
            self.mode = "prime"
        elif ctx._tables is not None:
            self.mode = "table"
            t = ctx._tables
            self.zech_np, self.neg_np = t["zech"], t["neg"]
            self.exp_np, self.log_np, self.inv_np = t["exp"], t["log"], t["inv"]
            self.zech_list, self.neg_list = t["zech"].tolist(), t["neg"].tolist()
            self.exp_list, self.log_list = t["exp"].tolist(), t["log"].tolist()
            self.inv_list = t["inv"].tolist()
        else:
            self.mode = "generic"


class FieldCtx:
    """The field F_q, q = p^k, with a fixed monic irreducible modulus."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        require_prime(p)
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is not None:
            modulus = tuple(int(c) % p for c in modulus)
            k = len(modulus) - 1
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if k > 1 and not _is_irreducible_prime_field(p, list(modulus)):
                raise ValueError(f"modulus {modulus} is reducible over F_{p}")
            if k == 1:
                modulus = None
        elif k > 1:
            raise ValueError("an extension field needs a modulus; use make_field")
        self.p, self.k, self.q = p, k, p**k
        self.modulus = modulus
        self._tables = None
        if k > 1 and self.q <= TABLE_LIMIT:
            self._tables = self._build_tables()
        self.kf = KernelField(self)
        self.inf = INF

    def __repr__(self):
        if self.k == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.q}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k, self.modulus) == (
            other.p,
            other.k,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # digit conversion ----------------------------------------------------

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        code = 0
        for d in reversed(list(ds)):
            code = code * self.p + d % self.p
        return code

    # scalar arithmetic on codes -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self._tables is not None:
            if a == 0:
                return b
            if b == 0:
                return a
            t = self._tables
            la = int(t["log"][a])
            z = int(t["zech"][(int(t["log"][b]) - la) % (self.q - 1)])
            return 0 if z < 0 else int(t["exp"][la + z])
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self._tables is not None:
            return int(self._tables["neg"][a])
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._tables is not None:
            t = self._tables
            return int(t["exp"][t["log"][a] + t["log"][b]])
        return self._poly_mul(a, b)

    def _poly_mul(self, a: int, b: int) -> int:
        p, k, m = self.p, self.k, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    prod[i + j] += u * v
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return self.from_digits(prod[:k])

    def pow(self, a: int, e: int) -> int:
        if self.k == 1:
            return pow(a, e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 0 if e else 1
        if self._tables is not None:
            t = self._tables
            return int(t["exp"][(int(t["log"][a]) * e) % (self.q - 1)])
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        if self._tables is not None:
            return int(self._tables["inv"][a])
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    # element-level API ----------------------------------------------------

    def __call__(self, value) -> FqElem:
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise ValueError("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return FqElem(self, self.from_digits(value))
        return FqElem(self, self.from_int(int(value)))

    def elem(self, code: int) -> FqElem:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} outside 0..{self.q - 1}")
        return FqElem(self, code)

    def elements(self):
        return [FqElem(self, c) for c in range(self.q)]

    def order(self, a: int) -> int:
        """Multiplicative order of the element with code a."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r, _ in _factor_cached(n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    def _build_tables(self):
        q, p = self.q, self.p
        n = q - 1
        gen = None
        for g in range(2, q):
            if all(self._slow_pow(g, n // r) != 1 for r, _ in _factor_cached(n)):
                gen = g
                break
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._poly_mul(x, gen)
        exp[n:] = exp[:n]
        codes = np.arange(q, dtype=np.int64)
        neg = np.zeros(q, dtype=np.int64)
        for i in range(self.k):
            d = (codes // p**i) % p
            neg += ((-d) % p) * p**i
        # Zech logarithm: exp[zech[d]] = 1 + exp[d], or -1 when that sum is 0
        v = exp[:n]
        one_plus = np.where(v % p == p - 1, v - (p - 1), v + 1)
        zech = np.where(one_plus == 0, -1, log[one_plus])
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(n - log[1:]) % n]
        as32 = lambda a: np.ascontiguousarray(a, dtype=np.int32)
        return {
            "exp": as32(exp),
            "log": as32(log),
            "zech": as32(zech),
            "neg": as32(neg),
            "inv": as32(inv),
        }

    def _slow_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            e >>= 1
            if e:
                a = self._poly_mul(a, a)
        return result


@lru_cache(maxsize=None)
def _factor_cached(n: int):
    return factorint(n).factors


@total_ordering
class FqElem:
    """An element of F_q; ordered and hashed by its code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _other(self, other):
        if isinstance(other, FqElem):
            return other.code
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FqElem(self.ctx, self.ctx.div(o, self.code))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FqElem(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self):
        return FqElem(self.ctx, self.ctx.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx == other.ctx and self.code == other.code
        if isinstance(other, int):
            return self.code == self.ctx.from_int(other)
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Infinity):
            return True
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.code < other.code

    def __hash__(self):
        return hash(self.code)

    def __int__(self):
        return self.code

    def is_zero(self):
        return self.code == 0

    def digits(self):
        return self.ctx.digits(self.code)

    def __repr__(self):
        return f"FqElem({self})"

    def __str__(self):
        if self.ctx.k == 1:
            return str(self.code)
        terms = []
        for i, c in enumerate(self.digits()):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(f"{c}{'*' if mono else ''}{mono}" if (c != 1 or not mono) else mono)
        return " + ".join(reversed(terms)) or "0"


class Infinity:
    """The point at infinity of the projective line; a single shared value."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("projective-infinity")


INF = Infinity()


def projective_line(ctx: FieldCtx):
    """All of PF_q in canonical order: finite codes ascending, then INF."""
    return ctx.elements() + [INF]


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldCtx:
    """F_{p^k} with the least monic irreducible modulus (codes of the lower
    coefficients scanned in increasing order)."""
    require_prime(p)
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        return FieldCtx(p)
    for low in range(p**k):
        cand = [(low // p**i) % p for i in range(k)] + [1]
        if cand[0] == 0:
            continue
        if _is_irreducible_prime_field(p, cand):
            return FieldCtx(p, k, cand)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


def field_of_order(q: int) -> FieldCtx:
    """make_field for a prime power given as q."""
    f = factorint(q)
    if not f.complete or len(f.factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, k), = f.factors
    return make_field(p, k)


def _is_irreducible_prime_field(p: int, f: list[int]) -> bool:
    return _is_irreducible(make_field(p, 1).kf, p, f)


def _is_irreducible(F, q: int, f: list[int]) -> bool:
    """Rabin's test for a monic f over the field of descriptor F (order q)."""
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for r, _ in factorint(n).factors:
        h = kernels.powmod(F, x, q ** (n // r), f)
        g = kernels.gcd(F, _sub_lists(F, h, x), f)
        if len(g) > 1:
            return False
    h = kernels.powmod(F, x, q**n, f)
    return _sub_lists(F, h, x) == []


def _sub_lists(F, a, b):
    ctx = F.ctx
    n = max(len(a), len(b))
    out = [ctx.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _minus_x(ctx, h):
    out = list(h) + [0] * (2 - len(h))
    out[1] = ctx.sub(out[1], 1)
    return _trim(out)


def element_order(a: FqElem) -> int:
    return a.ctx.order(a.code)


def find_zeta(ctx: FieldCtx, ell: int) -> tuple[FqElem, FqElem]:
    """The least element of order ell (in code order) and its inverse."""
    require_prime(ell, "ell")
    if ell == 2:
        raise ValueError("ell must be an odd prime")
    if (ctx.q - 1) % ell:
        raise ValueError(f"q={ctx.q} is not 1 mod {ell}; F_q has no primitive {ell}-th root of unity")
    for code in range(2, ctx.q):
        if ctx.pow(code, ell) == 1:
            z = FqElem(ctx, code)
            return z, z.inverse()
    raise AssertionError("unreachable")


def zeta_from_zeta_plus(ctx: FieldCtx, zplus, ell: int) -> tuple[FqElem, FqElem]:
    """Roots of x^2 - zplus*x + 1, checked to have order ell, sorted by code."""
    zp = ctx(zplus) if not isinstance(zplus, FqElem) else zplus
    quad = FqPoly(ctx, [1, ctx.neg(zp.code), 1])
    factors = factor_fq(quad)
    if len(factors) == 1 and factors[0][0].degree == 2:
        raise ValueError("zeta is not rational over this residue field")
    roots = []
    for g, mult in factors:
        roots.extend([FqElem(ctx, ctx.neg(g.coeffs[0]))] * mult)
    roots.sort()
    if any(element_order(r) != ell for r in roots):
        raise ValueError(f"zplus={zp} is not an {ell}-th trace")
    return roots[0], roots[1]


class QuadExt:
    """F_q[y]/(y^2 - s*y + 1) for an irreducible quadratic over F_q.

    Elements are pairs (a, b) of codes meaning a + b*y.  Used to adjoin zeta
    when only its trace s = zeta + 1/zeta lives in the base field.
    """

    def __init__(self, base: FieldCtx, s: int):
        self.base = base
        self.s = s
        quad = FqPoly(base, [1, base.neg(s), 1])
        if not quad.is_irreducible():
            raise ValueError("y^2 - s*y + 1 splits over the base field")
        self.order_bound = base.q**2 - 1
        self.y = (0, 1)
        self.one = (1, 0)

    def embed(self, a: int):
        return (a, 0)

    def sub(self, u, v):
        f = self.base
        return (f.sub(u[0], v[0]), f.sub(u[1], v[1]))

    def mul(self, u, v):
        f = self.base
        a, b = u
        c, d = v
        bd = f.mul(b, d)
        # y^2 = s*y - 1
        re = f.sub(f.mul(a, c), bd)
        im = f.add(f.add(f.mul(a, d), f.mul(b, c)), f.mul(bd, self.s))
        return (re, im)

    def pow(self, u, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, u)
            e >>= 1
            if e:
                u = self.mul(u, u)
        return result

    def inv(self, u):
        # conjugate of a + b*y is a + b*(s - y); their product is the norm
        f = self.base
        a, b = u
        conj = (f.add(a, f.mul(b, self.s)), f.neg(b))
        norm = self.mul(u, conj)[0]
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse")
        ninv = f.inv(norm)
        return (f.mul(conj[0], ninv), f.mul(conj[1], ninv))

    def div(self, u, v):
        return self.mul(u, self.inv(v))

    def order(self, u) -> int:
        if u == (0, 0):
            raise ValueError("zero has no multiplicative order")
        n = self.order_bound
        order = n
        for r, _ in _factor_cached(n):
            while order % r == 0 and self.pow(u, order // r) == self.one:
                order //= r
        return order


class FqPoly:
    """Dense polynomial over F_q; coefficients are element codes, low first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        c = [x.code if isinstance(x, FqElem) else int(x) for x in coeffs]
        if any(not 0 <= x < ctx.q for x in c):
            raise ValueError("coefficients must be element codes")
        while c and c[-1] == 0:
            c.pop()
        self.ctx = ctx
        self.coeffs = tuple(c)

    @classmethod
    def from_ints(cls, ctx, ints):
        return cls(ctx, [ctx.from_int(a) for a in ints])

    @classmethod
    def _raw(cls, ctx, coeffs):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, FqPoly) and self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"FqPoly(F_{self.ctx.q}, {list(self.coeffs)})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(FqElem(self.ctx, c))
            if self.ctx.k > 1 and "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(terms)

    def _lift(self, other):
        if isinstance(other, FqPoly):
            return list(other.coeffs)
        if isinstance(other, FqElem):
            return [other.code] if other.code else []
        if isinstance(other, int):
            c = self.ctx.from_int(other)
            return [c] if c else []
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FqPoly._raw(self.ctx, _add_lists(self.ctx, list(self.coeffs), o))

    __radd__ = __add__

    def __neg__(self):
        return FqPoly._raw(self.ctx, [self.ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FqPoly._raw(self.ctx, _sub_lists(self.ctx.kf, list(self.coeffs), o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FqPoly._raw(self.ctx, kernels.mul(self.ctx.kf, list(self.coeffs), o))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._lift(other)
        q, r = kernels.divmod_(self.ctx.kf, list(self.coeffs), o)
        return FqPoly._raw(self.ctx, q), FqPoly._raw(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return FqPoly._raw(self.ctx, kernels.rem(self.ctx.kf, list(self.coeffs), self._lift(other)))

    def __pow__(self, e):
        result = FqPoly(self.ctx, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, m: FqPoly) -> FqPoly:
        return FqPoly._raw(self.ctx, kernels.powmod(self.ctx.kf, list(self.coeffs), e, list(m.coeffs)))

    def monic(self) -> FqPoly:
        return FqPoly._raw(self.ctx, kernels.monic(self.ctx.kf, list(self.coeffs)))

    def gcd(self, other: FqPoly) -> FqPoly:
        return FqPoly._raw(self.ctx, kernels.gcd(self.ctx.kf, list(self.coeffs), list(other.coeffs)))

    def derivative(self) -> FqPoly:
        ctx = self.ctx
        return FqPoly._raw(
            ctx, _trim([ctx.mul(ctx.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])
        )

    def __call__(self, a):
        ctx = self.ctx
        code = a.code if isinstance(a, FqElem) else ctx.from_int(a)
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, code), c)
        return FqElem(ctx, acc)

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        return _is_irreducible(self.ctx.kf, self.ctx.q, list(self.monic().coeffs))

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    def factor(self, seed=None):
        return factor_fq(self, seed)


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _add_lists(ctx, a, b):
    n = max(len(a), len(b))
    return _trim([ctx.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])


# factorization ---------------------------------------------------------------


def _pth_root(ctx, f):
    """g with g^p = f for f whose only nonzero terms have degree divisible by p."""
    e = ctx.q // ctx.p
    return _trim([ctx.pow(f[i], e) for i in range(0, len(f), ctx.p)])


def squarefree_decomposition(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Pairs (g, m) of coprime squarefree monic g with prod g^m = monic(f)."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    ctx, F = f.ctx, f.ctx.kf
    out: dict[int, list] = {}

    def rec(a: list, scale: int):
        if len(a) <= 1:
            return
        da = FqPoly._raw(ctx, a).derivative().coeffs
        if not da:
            rec(_pth_root(ctx, a), scale * ctx.p)
            return
        c = kernels.gcd(F, a, list(da))
        w = kernels.divmod_(F, a, c)[0]
        i = 1
        while len(w) > 1:
            y = kernels.gcd(F, w, c)
            fac = kernels.divmod_(F, w, y)[0]
            if len(fac) > 1:
                out.setdefault(i * scale, []).append(fac)
            i += 1
            w = y
            c = kernels.divmod_(F, c, y)[0]
        if len(c) > 1:
            rec(_pth_root(ctx, c), scale * ctx.p)

    rec(list(f.monic().coeffs), 1)
    result = []
    for m in sorted(out):
        prod = [1]
        for g in out[m]:
            prod = kernels.mul(F, prod, g)
        result.append((FqPoly._raw(ctx, kernels.monic(F, prod)), m))
    return result


def distinct_degree(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Split a squarefree monic f into products of equal-degree irreducibles."""
    ctx, F = f.ctx, f.ctx.kf
    a = list(f.monic().coeffs)
    if len(a) <= 1:
        return []
    rows = kernels.frobenius_matrix(F, a)
    h = [0, 1] if len(a) > 2 else kernels.rem(F, [0, 1], a)
    out = []
    i = 0
    cur = a
    while len(cur) > 1:
        i += 1
        if len(cur) - 1 < 2 * i:
            out.append((FqPoly._raw(ctx, cur), len(cur) - 1))
            break
        h = kernels.frobenius_apply(F, rows, h)
        g = kernels.gcd(F, cur, kernels.rem(F, _minus_x(ctx, h), cur))
        if len(g) > 1:
            out.append((FqPoly._raw(ctx, g), i))
            cur = kernels.divmod_(F, cur, g)[0]
    return out


def equal_degree(g: FqPoly, d: int, rng: random.Random) -> list[FqPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    ctx, F = g.ctx, g.ctx.kf
    stack = [list(g.monic().coeffs)]
    done = []
    while stack:
        a = stack.pop()
        n = len(a) - 1
        if n == d:
            done.append(a)
            continue
        rows = kernels.frobenius_matrix(F, a)
        while True:
            r = _trim([rng.randrange(ctx.q) for _ in range(n)])
            if len(r) < 2:
                continue
            b = _split_element(F, ctx, r, a, d, rows)
            h = kernels.gcd(F, a, b)
            if 1 < len(h) < len(a):
                stack.append(h)
                stack.append(kernels.divmod_(F, a, h)[0])
                break
    return [FqPoly._raw(ctx, x) for x in done]


def _split_element(F, ctx, r, a, d, rows):
    if ctx.p == 2:
        # absolute trace r + r^2 + ... + r^(2^(k d - 1)) mod a
        acc = list(r)
        cur = list(r)
        for _ in range(ctx.k * d - 1):
            cur = kernels.mulmod(F, cur, cur, a)
            acc = _add_lists(ctx, acc, cur)
        return acc
    # norm-like product r^(1 + q + ... + q^(d-1)), then the quadratic character
    prod = list(r)
    cur = list(r)
    for _ in range(d - 1):
        cur = kernels.frobenius_apply(F, rows, cur)
        prod = kernels.mulmod(F, prod, cur, a)
    b = kernels.powmod(F, prod, (ctx.q - 1) // 2, a)
    return _sub_lists(F, b, [1])


def factor_fq(f: FqPoly, seed=None) -> list[tuple[FqPoly, int]]:
    """Complete factorization of f into monic irreducibles with multiplicity.

    Factors come back sorted by (degree, coefficients), so the result does
    not depend on the random stream; f equals lc(f) times the product.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    ctx = f.ctx
    rng = random.Random(hash((DEFAULT_SEED if seed is None else seed, ctx.p, ctx.k)))
    found = []
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                found.append((irr, m))
    found.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs, gm[1]))
    return found


def degree_profile(f: FqPoly) -> dict[tuple[int, int], int]:
    """Histogram {(degree, multiplicity): number of irreducible factors}.

    Stops after distinct-degree splitting, which already fixes the degrees.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    hist: dict[tuple[int, int], int] = {}
    for g, m in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            key = (d, m)
            hist[key] = hist.get(key, 0) + h.degree // d
    return hist


def expand(factors, lc=1) -> FqPoly:
    """Multiply out a factor list (inverse of factor_fq up to the unit)."""
    if not factors:
        raise ValueError("empty factor list")
    ctx = factors[0][0].ctx
    acc = FqPoly(ctx, [lc])
    for g, m in factors:
        acc = acc * g**m
    return acc


__all__ = [
    "FieldCtx",
    "FqElem",
    "FqPoly",
    "INF",
    "Infinity",
    "QuadExt",
    "degree_profile",
    "distinct_degree",
    "element_order",
    "equal_degree",
    "expand",
    "factor_fq",
    "field_of_order",
    "find_zeta",
    "is_prime",
    "make_field",
    "projective_line",
    "squarefree_decomposition",
    "zeta_from_zeta_plus",
]
