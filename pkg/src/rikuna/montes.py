"""Order-one Montes: phi-developments, principal Newton polygons, residual
polynomials and the lattice-point index bound.

For a monic separable f in Z[x] and a prime p, each irreducible factor of
f mod p is lifted to a monic phi in Z[x]; the lattice points strictly inside
the first quadrant on or under the negative-slope part of the phi-polygon,
times deg phi, summed over the factors, bound v_p([O_K : Z[theta]]) from
below.  The bound is the exact value when every residual polynomial is
separable (f is p-regular).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import INFINITE, require_prime, val_p
from .finite_field import FieldCtx, FqPoly, factor_fq, make_field
from .zpoly import ZPoly, discriminant


@dataclass(frozen=True)
class Development:
    """f = sum coeffs[i] * phi**i with deg coeffs[i] < deg phi."""

    f: ZPoly
    phi: ZPoly
    coeffs: tuple[ZPoly, ...]
    p: int | None = None

    def reassemble(self) -> ZPoly:
        acc = ZPoly()
        for a in reversed(self.coeffs):
            acc = acc * self.phi + a
        return acc

    def valuations(self, p: int | None = None) -> list:
        p = self.p if p is None else p
        return [val_p(a, p) for a in self.coeffs]


def phi_development(f: ZPoly, phi: ZPoly, p: int | None = None) -> Development:
    if phi.degree < 1 or not phi.is_monic():
        raise ValueError(f"phi={phi} must be monic of degree >= 1")
    coeffs = []
    rest = f
    while rest.degree >= phi.degree:
        rest, a = rest.divmod_monic(phi)
        coeffs.append(a)
    coeffs.append(rest)
    return Development(f, phi, tuple(coeffs), p)


@dataclass
class Side:
    start: tuple[int, int]
    end: tuple[int, int]
    slope: Fraction
    degree: int
    residual: FqPoly | None = None
    separable: bool | None = None

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    def height_at(self, x) -> Fraction:
        return self.start[1] + self.slope * (x - self.start[0])

    def lattice_abscissae(self) -> list[int]:
        step = self.length // self.degree
        return [self.start[0] + i * step for i in range(self.degree + 1)]


@dataclass
class NewtonPolygon:
    points: list[tuple[int, int]]
    vertices: list[tuple[int, int]]
    sides: list[Side]

    @property
    def length(self) -> int:
        """Abscissa where the principal part reaches the horizontal axis."""
        return self.sides[-1].end[0] if self.sides else 0

    def height_at(self, x) -> Fraction:
        for s in self.sides:
            if s.start[0] <= x <= s.end[0]:
                return s.height_at(x)
        raise ValueError(f"x={x} outside the principal part")


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Vertices of the lower convex hull, left to right; collinear points dropped."""
    hull: list[tuple[int, int]] = []
    for pt in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def newton_polygon(dev: Development, p: int | None = None) -> NewtonPolygon:
    """Principal (negative-slope) part of the phi-polygon, with residuals."""
    p = dev.p if p is None else p
    require_prime(p)
    vals = dev.valuations(p)
    points = [(i, v) for i, v in enumerate(vals) if v != INFINITE]
    if not points:
        raise ValueError("f vanishes identically; no Newton polygon")
    verts = lower_hull(points)
    sides = []
    principal = [verts[0]]
    for a, b in zip(verts, verts[1:]):
        if b[1] >= a[1]:
            break
        dx, dy = b[0] - a[0], b[1] - a[1]
        sides.append(Side(a, b, Fraction(dy, dx), gcd(dx, -dy)))
        principal.append(b)
    poly = NewtonPolygon(points, principal, sides)
    if sides:
        ctx = residue_field(p, dev.phi)
        for s in sides:
            s.residual = residual_poly(s, dev, p, ctx)
            s.separable = s.residual.is_squarefree()
    return poly


@lru_cache(maxsize=256)
def _residue_field_cached(p: int, phibar: tuple[int, ...]) -> FieldCtx:
    if len(phibar) == 2:
        return make_field(p, 1)
    return FieldCtx(p, modulus=phibar)


def residue_field(p: int, phi: ZPoly) -> FieldCtx:
    """F_p[x]/(phi mod p)."""
    return _residue_field_cached(p, tuple(phi.reduce(p)))


def reduce_unit(a: ZPoly, p: int, ctx: FieldCtx) -> int:
    """Code of a / p^v_p(a) in F_p[x]/(phi); a has degree < deg phi."""
    v = val_p(a, p)
    scaled = a.exact_div(p**v)
    return ctx.from_digits([c % p for c in scaled.coeffs] + [0] * (ctx.k - len(scaled.coeffs)))


def residual_poly(side: Side, dev: Development, p: int | None = None, ctx: FieldCtx | None = None) -> FqPoly:
    """R_S(y): reduced coefficients at lattice points of S, 0 above it."""
    p = dev.p if p is None else p
    ctx = residue_field(p, dev.phi) if ctx is None else ctx
    out = []
    for x in side.lattice_abscissae():
        a = dev.coeffs[x] if x < len(dev.coeffs) else ZPoly()
        v = val_p(a, p)
        if v != INFINITE and side.height_at(x) == v:
            out.append(reduce_unit(a, p, ctx))
        else:
            out.append(0)
    return FqPoly(ctx, out)


@dataclass(frozen=True)
class LatticeCount:
    count: int
    area2: int  # twice the area, kept integral
    boundary: int
    interior: int

    @property
    def pick_ok(self) -> bool:
        # I = A + 1 - B/2, doubled to stay in integers
        return 2 * self.interior == self.area2 + 2 - self.boundary


def lattice_count(poly: NewtonPolygon) -> LatticeCount:
    """Points with x > 0, y > 0 on or under the principal polygon.

    Counted column by column; the closed region bounded by the polygon and
    the two axes is also measured so Pick's identity can be checked.
    """
    if not poly.sides:
        return LatticeCount(0, 0, 0, 0)
    e = poly.length
    count = 0
    for x in range(1, e):
        h = poly.height_at(x)
        count += h.numerator // h.denominator
    y0 = poly.sides[0].start[1]
    area2 = 0
    for s in poly.sides:
        (x0, a), (x1, b) = s.start, s.end
        area2 += (x1 - x0) * (a + b)
    on_chain = sum(s.degree for s in poly.sides) + 1
    boundary = y0 + e + on_chain - 1
    # count on the chain minus its two axis endpoints is the boundary share
    interior = count - (on_chain - 2)
    lc = LatticeCount(count, area2, boundary, interior)
    if not lc.pick_ok:
        raise AssertionError(f"Pick identity fails for polygon {poly.vertices}")
    return lc


@dataclass
class FactorIndex:
    phi: ZPoly
    multiplicity: int
    development: Development
    polygon: NewtonPolygon
    lattice: int
    ind: int
    regular: bool


@dataclass
class IndexReport:
    p: int
    factors: list[FactorIndex] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(fi.ind for fi in self.factors)

    @property
    def exact(self) -> bool:
        return all(fi.regular for fi in self.factors)


def lift_factor(phibar: FqPoly) -> ZPoly:
    """Monic lift with least nonnegative residues."""
    return ZPoly(phibar.monic().coeffs)


def _is_squarefree(f: ZPoly) -> bool:
    for p in (10007, 10009, 10037):
        if f.lc % p == 0:
            continue
        fp = FqPoly.from_ints(make_field(p), f.coeffs)
        if fp.degree == f.degree and fp.is_squarefree():
            return True
    return discriminant(f) != 0


def index_p(f: ZPoly, p: int, seed=None) -> IndexReport:
    """Lower bound (exact when p-regular) for v_p of the index of Z[theta]."""
    require_prime(p)
    if not f.is_monic():
        raise ValueError("f must be monic")
    if f.degree < 1:
        raise ValueError("f must have positive degree")
    if not _is_squarefree(f):
        raise ValueError("f is not squarefree over Q")
    fbar = FqPoly.from_ints(make_field(p), f.coeffs)
    report = IndexReport(p)
    for gbar, mult in factor_fq(fbar, seed):
        phi = lift_factor(gbar)
        dev = phi_development(f, phi, p)
        while dev.coeffs[0].is_zero():
            # phi divides f in Z[x]; shift the lift so the polygon has a left end
            phi = phi + p
            dev = phi_development(f, phi, p)
        poly = newton_polygon(dev)
        L = lattice_count(poly).count
        regular = all(s.separable for s in poly.sides)
        report.factors.append(FactorIndex(phi, mult, dev, poly, L, L * phi.degree, regular))
    return report


__all__ = [
    "Development",
    "FactorIndex",
    "IndexReport",
    "LatticeCount",
    "NewtonPolygon",
    "Side",
    "index_p",
    "lattice_count",
    "lift_factor",
    "lower_hull",
    "newton_polygon",
    "phi_development",
    "residual_poly",
    "residue_field",
]
