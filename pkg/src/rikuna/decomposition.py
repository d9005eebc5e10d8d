"""How phi^n(x) - t factors over a residue field F_q, q = 1 mod ell, and
what that says about primes of K_n above a prime p of K = Q(zeta+).

The prediction walks the backward orbit of t.  Under beta, phi becomes
b -> b^ell, so each preimage step either keeps the ell-free order d (one
preimage of a periodic point) or raises the ell-part of ord beta by one.
A point whose beta has order ell^e * d generates an extension of degree
ell^max(0, e - M) over F_q, where M = v_ell(q - 1).  Grouping roots by that
degree gives the factor degrees.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

from .arith import require_prime
from .closed_forms import ind3_closed, indp_closed, norm_t
from .core import RikunaMap
from .dynamics import _split_ell, orbit_stats
from .finite_field import FieldCtx, FqElem, factor_fq, make_field

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeSpec:
    """A prime of Q(zeta+) given by its residue field F_{p^k} and the image
    of zeta+ there.  For ell = 3 the field is Q and zplus defaults to -1."""

    p: int
    k: int = 1
    zplus: object = None

    def __post_init__(self):
        require_prime(self.p)
        if self.k < 1:
            raise ValueError(f"residue degree k={self.k} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.k

    def field(self) -> FieldCtx:
        return make_field(self.p, self.k)

    def rikuna_map(self, ell: int) -> RikunaMap:
        if self.zplus is None and ell != 3:
            raise ValueError(f"ell={ell} needs the residue of zeta+ (zplus)")
        return RikunaMap(self.field(), ell, zplus=self.zplus)


@dataclass(frozen=True)
class FactorPattern:
    """Irreducible factors as (degree, count), counted with multiplicity.

    ``squarefree`` is False for the repeated-root case t = zeta^(+-1).
    """

    entries: tuple[tuple[int, int], ...]
    source: str  # "predicted" or "observed"
    squarefree: bool = True

    @classmethod
    def from_counts(cls, counts, source, squarefree=True) -> "FactorPattern":
        entries = tuple(sorted((d, c) for d, c in dict(counts).items() if c))
        return cls(entries, source, squarefree)

    @property
    def degree_sum(self) -> int:
        return sum(d * c for d, c in self.entries)

    @property
    def factor_count(self) -> int:
        return sum(c for _, c in self.entries)

    def problems(self, ell: int, n: int) -> list[str]:
        out = []
        if self.degree_sum != ell**n:
            out.append(f"degrees sum to {self.degree_sum}, expected {ell}^{n}")
        for d, _ in self.entries:
            if _split_ell(d, ell)[1] != 1:
                out.append(f"degree {d} is not a power of {ell}")
        return out

    def same_shape(self, other: "FactorPattern") -> bool:
        return self.entries == other.entries and self.squarefree == other.squarefree

    def __str__(self):
        body = ", ".join(f"{c} x deg {d}" for d, c in self.entries)
        return body if self.squarefree else body + " (repeated)"


@dataclass(frozen=True)
class PrintedCases:
    """The three-case closed form for the factor pattern, as printed."""

    case: int
    entries: tuple[tuple[int, int], ...]
    degree_sum: int


def printed_cases(n: int, pper: int, M: int, ell: int) -> PrintedCases:
    if n <= M - pper:
        entries = ((1, ell**n),)
        case = 1
    elif pper >= 1:
        entries = ((ell ** (n - M + pper), ell ** (M - pper)),)
        case = 2
    else:
        # Sum_{i=1}^M ell^i linear factors, ell^M of degree ell^i for i <= n - M
        entries = ((1, sum(ell**i for i in range(1, M + 1))),)
        entries += tuple((ell**i, ell**M) for i in range(1, n - M + 1))
        case = 3
    return PrintedCases(case, entries, sum(d * c for d, c in entries))


def _require_split(rmap: RikunaMap) -> int:
    q, ell = rmap.ctx.q, rmap.ell
    if (q - 1) % ell or rmap.zeta is None:
        raise ValueError(f"q={q} is not 1 mod {ell}; no factorization pattern is predicted")
    return _split_ell(q - 1, ell)[0]


def _is_zeta(t: FqElem, rmap: RikunaMap) -> bool:
    return rmap.zeta is not None and t in (rmap.zeta, rmap.zeta_inv)


def backward_counts(n: int, e0: int, ell: int) -> Counter:
    """Number of level-n preimages of a point with ell-part ell^e0 of ord beta,
    keyed by the ell-part exponent of the preimage."""
    layer = Counter({e0: 1})
    for _ in range(n):
        nxt = Counter()
        for e, c in layer.items():
            if e == 0:
                nxt[0] += c
                nxt[1] += (ell - 1) * c
            else:
                nxt[e + 1] += ell * c
        layer = nxt
    return layer


def predict_pattern(n: int, t_res, rmap: RikunaMap) -> FactorPattern:
    """Factor degrees of phi^n(x) - t over F_q from the backward orbit of t.

    The printed three-case formula is evaluated alongside; any disagreement
    is logged at WARNING level.
    """
    if n < 1:
        raise ValueError(f"level n={n} must be >= 1")
    M = _require_split(rmap)
    ell = rmap.ell
    t = rmap._elem(t_res)
    if _is_zeta(t, rmap):
        # r_n = (x - t)^(ell^n) mod p
        return FactorPattern(((1, ell**n),), "predicted", squarefree=False)
    e0 = orbit_stats(t, rmap).pper
    degrees = Counter()
    for e, c in backward_counts(n, e0, ell).items():
        w = ell ** max(0, e - M)
        if c % w:
            raise AssertionError(f"{c} roots of weight {w} do not form whole orbits")
        degrees[w] += c // w
    pattern = FactorPattern.from_counts(degrees, "predicted")
    bad = pattern.problems(ell, n)
    if bad:
        raise AssertionError(f"backward-orbit pattern is inconsistent: {bad}")
    shadow = printed_cases(n, e0, M, ell)
    if shadow.entries != pattern.entries:
        log.warning(
            "printed case (%d) gives %s (degree sum %d) for ell=%d, M=%d, n=%d, pper=%d; "
            "backward orbit gives %s",
            shadow.case, list(shadow.entries), shadow.degree_sum, ell, M, n, e0, list(pattern.entries),
        )
    return pattern


def _factor_profile(n: int, t_res, rmap: RikunaMap, seed=None) -> Counter:
    """{(degree, multiplicity): count} from a complete factorization of r_n."""
    if n < 1:
        raise ValueError(f"level n={n} must be >= 1")
    profile = Counter()
    for g, m in factor_fq(rmap.r(n, t_res), seed):
        profile[g.degree, m] += 1
    return profile


def _pattern_from_profile(profile: Counter) -> FactorPattern:
    degrees = Counter()
    for (d, m), c in profile.items():
        degrees[d] += m * c
    squarefree = all(m == 1 for d, m in profile)
    return FactorPattern.from_counts(degrees, "observed", squarefree)


def observe_pattern(n: int, t_res, rmap: RikunaMap, seed=None) -> FactorPattern:
    """Factor r_n(x, t) over F_q completely and histogram the degrees."""
    return _pattern_from_profile(_factor_profile(n, t_res, rmap, seed))


@dataclass(frozen=True)
class PrimeAbove:
    residue_degree: int
    ramification: int
    count: int


@dataclass
class DecompositionReport:
    spec: PrimeSpec
    ell: int
    n: int
    t: object
    t_res: FqElem
    pper: int | None
    M: int | None
    split_field: bool  # q = 1 mod ell
    squarefree: bool  # r_n squarefree mod the prime
    index_coprime: bool | None  # p does not divide ind r_n (checked for ell = 3)
    predicted: FactorPattern | None
    observed: FactorPattern
    primes: list[PrimeAbove] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def dedekind(self) -> bool:
        """True when the factor pattern is the splitting of the prime in K_n."""
        if self.ell == 3:
            return bool(self.index_coprime)
        return self.squarefree

    @property
    def applicable(self) -> bool:
        return self.split_field and self.dedekind

    @property
    def match(self) -> bool | None:
        if self.predicted is None:
            return None
        return self.predicted.same_shape(self.observed)


def reduce_t(t, rmap: RikunaMap) -> FqElem:
    """Image of t in the residue field.

    An int is reduced directly; a sequence of ints is read as the
    coefficients (constant first) of a polynomial in zeta+.
    """
    ctx = rmap.ctx
    if isinstance(t, FqElem):
        return t
    if isinstance(t, int):
        return ctx(t)
    acc = ctx(0)
    for c in reversed(list(t)):
        acc = acc * rmap.zplus + c
    return acc


def _index_coprime_ell3(n: int, t: int, p: int) -> bool:
    if p == 3:
        return ind3_closed(n, t).ind3 == 0
    if norm_t(t) % p:
        return True
    return indp_closed(n, t, p) == 0


def decompose(n: int, t, spec: PrimeSpec, ell: int, seed=None) -> DecompositionReport:
    """Predicted and observed factorization of r_n(x, t) mod the prime, and
    the primes of K_n above it when Dedekind's criterion applies."""
    rmap = spec.rikuna_map(ell)
    t_res = reduce_t(t, rmap)
    profile = _factor_profile(n, t_res, rmap, seed)
    observed = _pattern_from_profile(profile)
    split = (spec.q - 1) % ell == 0
    warnings = []
    predicted = pper = M = None
    if split:
        M = _split_ell(spec.q - 1, ell)[0]
        pper = None if _is_zeta(t_res, rmap) else orbit_stats(t_res, rmap).pper
        predicted = predict_pattern(n, t_res, rmap)
        if pper is not None:
            shadow = printed_cases(n, pper, M, ell)
            if shadow.entries != predicted.entries:
                msg = f"printed case ({shadow.case}) gives {list(shadow.entries)}"
                if shadow.degree_sum != ell**n:
                    msg += f" with degree sum {shadow.degree_sum} != {ell}^{n}"
                warnings.append(msg)
    else:
        warnings.append(f"q={spec.q} is not 1 mod {ell}; only the observed factorization is reported")
    index_ok = None
    if ell == 3:
        if isinstance(t, int):
            index_ok = _index_coprime_ell3(n, t, spec.p)
        else:
            warnings.append("index test needs an integer t; Dedekind is not applied")
            index_ok = False
    report = DecompositionReport(
        spec, ell, n, t, t_res, pper, M, split, observed.squarefree, index_ok, predicted, observed,
        warnings=warnings,
    )
    if report.dedekind:
        report.primes = [PrimeAbove(f, e, c) for (f, e), c in sorted(profile.items())]
    else:
        report.warnings.append("Dedekind's criterion does not apply; no statement about primes of K_n")
    if report.match is False:
        report.warnings.append(f"predicted {predicted} but observed {observed}")
    return report


def irreducibility_certificate(t, spec: PrimeSpec, ell: int) -> bool:
    """True when t mod the prime has maximal preperiod M.

    Then phi^n(x) - t stays irreducible mod the prime for every n, hence
    r_n(x, t) is irreducible over Q(zeta+) for every n.
    """
    rmap = spec.rikuna_map(ell)
    M = _require_split(rmap)
    t_res = reduce_t(t, rmap)
    if _is_zeta(t_res, rmap):
        return False
    return orbit_stats(t_res, rmap).pper == M


__all__ = [
    "DecompositionReport",
    "FactorPattern",
    "PrimeAbove",
    "PrimeSpec",
    "PrintedCases",
    "backward_counts",
    "decompose",
    "irreducibility_certificate",
    "observe_pattern",
    "predict_pattern",
    "printed_cases",
    "reduce_t",
]
