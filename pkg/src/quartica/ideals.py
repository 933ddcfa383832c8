"""Ideals of finite point sets, checked through evaluation ranks and resultants.

No Groebner bases: the Hilbert function of a point set in degree t is the rank
of its degree-t evaluation matrix, and minimal generators in degree t are
counted as dim I_t - dim(S_1 * I_{t-1}).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .census import SEEDS, EXTRA_SEEDS, Projection, _pair_resultant, _projection, _stable_pattern
from .errors import CertificateFailure, CommonComponent, DegenerateInput, MismatchedLocus, SpecInconsistent
from .geometry import ProjLine, ProjPoint, meet
from .poly import MultiPoly, UniPoly, gcd, resultant
from . import linalg


def monomials(t: int) -> list[tuple[int, int, int]]:
    """Degree-t monomials in grlex order x > y > z."""
    return [(a, b, t - a - b) for a in range(t, -1, -1) for b in range(t - a, -1, -1)]


class PointSet:
    """Finite set of distinct points over one tower."""

    def __init__(self, points: Sequence[ProjPoint], name: str = ""):
        pts = list(points)
        if len(set(pts)) != len(pts):
            raise DegenerateInput("point set contains repeated points")
        if not pts:
            raise DegenerateInput("empty point set")
        tower = pts[0].tower
        self.tower = tower
        self.points = [p if p.tower is tower else p.lift(tower) for p in pts]
        self.name = name
        self._rows: dict[int, list] = {}

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def evaluation_matrix(self, t: int) -> list[list]:
        rows = self._rows.get(t)
        if rows is None:
            mons = monomials(t)
            rows = []
            for p in self.points:
                powers = [[p.coords[k] ** e for e in range(t + 1)] for k in range(3)]
                rows.append([powers[0][a] * powers[1][b] * powers[2][c] for a, b, c in mons])
            self._rows[t] = rows
        return rows

    def ideal_basis(self, t: int) -> list[list]:
        """Coefficient vectors (over ``monomials(t)``) of the degree-t part of the ideal."""
        return linalg.kernel(self.evaluation_matrix(t), self.tower, comb(t + 2, 2))


def hilbert_function(ps: PointSet, t: int) -> int:
    if t < 0:
        return 0
    return linalg.rank(ps.evaluation_matrix(t), ps.tower)


def generator_counts(ps: PointSet, t_max: int) -> dict[int, int]:
    """Number of minimal generators of the point ideal in each degree up to t_max."""
    out = {}
    prev: list = []
    for t in range(t_max + 1):
        basis = ps.ideal_basis(t)
        if basis and prev:
            index = {m: k for k, m in enumerate(monomials(t))}
            products = []
            for v in prev:
                for shift in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
                    w = [ps.tower.zero] * len(index)
                    for m, c in zip(monomials(t - 1), v):
                        if c:
                            w[index[(m[0] + shift[0], m[1] + shift[1], m[2] + shift[2])]] = c
                    products.append(w)
            count = len(basis) - linalg.rank(products, ps.tower)
        else:
            count = len(basis)
        if count:
            out[t] = count
        prev = basis
    return out


@dataclass(frozen=True)
class BettiSpec:
    """Numerator of the Hilbert series of S/I, as (shift, signed multiplicity) pairs."""

    numerator: tuple
    expected_cardinality: int

    @classmethod
    def from_pairs(cls, pairs, cardinality: int) -> BettiSpec:
        return cls(tuple((int(a), int(m)) for a, m in pairs), int(cardinality))

    def value(self, t: int) -> int:
        return sum(m * comb(t - a + 2, 2) for a, m in self.numerator if t >= a)

    @property
    def max_shift(self) -> int:
        return max(a for a, _ in self.numerator)

    def generator_degrees(self) -> dict[int, int]:
        return {a: -m for a, m in self.numerator if m < 0}

    def check(self) -> None:
        if sum(m for _, m in self.numerator) != 0:
            raise SpecInconsistent("numerator does not vanish at T = 1")
        big = self.max_shift + 3
        if self.value(big) != self.expected_cardinality or self.value(big + 1) != self.expected_cardinality:
            raise SpecInconsistent(
                f"numerator stabilizes to {self.value(big)}, not {self.expected_cardinality}"
            )

    def __str__(self) -> str:
        parts = []
        for a, m in sorted(self.numerator):
            term = "1" if a == 0 else f"T^{a}"
            coef = "" if abs(m) == 1 else str(abs(m))
            parts.append(("-" if m < 0 else "+") + coef + term)
        return "".join(parts).lstrip("+")


@dataclass
class HilbertReport:
    consistent: bool
    table: list  # of (t, computed, expected)
    stabilizes: bool
    generators: dict
    expected_generators: dict

    @property
    def generators_match(self) -> bool:
        return self.generators == self.expected_generators

    def to_json(self) -> dict:
        return {
            "consistent": self.consistent,
            "stabilizes": self.stabilizes,
            "table": [{"t": t, "computed": c, "expected": e} for t, c, e in self.table],
            "generators": {str(k): v for k, v in self.generators.items()},
            "expected_generators": {str(k): v for k, v in self.expected_generators.items()},
        }


def hilbert_consistency(ps: PointSet, betti: BettiSpec, t_max: int | None = None) -> HilbertReport:
    betti.check()
    if betti.expected_cardinality != len(ps):
        raise SpecInconsistent(f"the Betti data describes {betti.expected_cardinality} points, the set has {len(ps)}")
    if t_max is None:
        t_max = betti.max_shift + 2
    table = [(t, hilbert_function(ps, t), betti.value(t)) for t in range(t_max + 1)]
    consistent = all(c == e for _, c, e in table)
    stabilizes = table[-1][1] == len(ps)
    gens = generator_counts(ps, t_max)
    return HilbertReport(consistent and stabilizes, table, stabilizes, gens, betti.generator_degrees())


# -- complete intersections ----------------------------------------------------
@dataclass
class CICertificate:
    vanish: bool  # (a)
    count: bool  # (b)
    coprime: bool  # (c)
    transversal: bool  # (d)
    size: int
    degrees: tuple

    @property
    def certified(self) -> bool:
        return self.vanish and self.count and self.coprime and self.transversal

    def failing_clause(self) -> str | None:
        for name in ("vanish", "count", "coprime", "transversal"):
            if not getattr(self, name):
                return name
        return None

    def to_json(self) -> dict:
        return {
            "a_vanish": self.vanish,
            "b_count": self.count,
            "c_coprime": self.coprime,
            "d_transversal": self.transversal,
            "size": self.size,
            "degrees": list(self.degrees),
            "certified": self.certified,
        }


def forms_coprime(f: MultiPoly, g: MultiPoly) -> bool:
    """No common component: every defined elimination resultant is nonzero."""
    checked = False
    for var in "xyz":
        if f.degree_in(var) > 0 and g.degree_in(var) > 0:
            checked = True
            if not resultant(f, g, var):
                return False
    return checked


def verify_complete_intersection(ps: PointSet, f: MultiPoly, g: MultiPoly, strict: bool = True) -> CICertificate:
    """Certify V(f, g) = ps from vanishing, degree count, coprimality and transversality."""
    if not isinstance(ps, PointSet):
        ps = PointSet(ps)
    vanish = all(not f.evaluate(p.coords) and not g.evaluate(p.coords) for p in ps)
    count = len(ps) == f.degree() * g.degree()
    coprime = forms_coprime(f, g)
    transversal = True
    if vanish:
        gf = [f.diff(k) for k in range(3)]
        gg = [g.diff(k) for k in range(3)]
        for p in ps:
            a = [d.evaluate(p.coords) for d in gf]
            b = [d.evaluate(p.coords) for d in gg]
            cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
            if not any(cross):
                transversal = False
                break
    else:
        transversal = False
    cert = CICertificate(vanish, count, coprime, transversal, len(ps), (f.degree(), g.degree()))
    if strict and not cert.certified:
        raise CertificateFailure(cert.failing_clause(), f"complete intersection clause '{cert.failing_clause()}' fails")
    return cert


# -- zero loci of products of lines --------------------------------------------
def lines_product(lines: Sequence[ProjLine]) -> MultiPoly:
    out = MultiPoly.const(lines[0].tower, 1)
    for L in lines:
        out = out * L.form()
    return out


def _proportional(f: MultiPoly, g: MultiPoly) -> bool:
    if set(f.terms) != set(g.terms):
        return False
    m = next(iter(f.terms))
    r = g.terms[m] / f.terms[m]
    return all(g.terms[k] == r * c for k, c in f.terms.items())


@dataclass
class ZeroLocusReport:
    equal: bool
    points: list  # the common zero locus when finite
    common_lines: list  # lines contained in every generator (locus not finite)
    extra: list  # locus points not in the given set
    missing: list  # given points not in the locus

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "size": len(self.points),
            "common_lines": [str(L) for L in self.common_lines],
            "extra": [str(p) for p in self.extra],
            "missing": [str(p) for p in self.missing],
        }


def generator_zero_locus_check(ps, gens: Sequence[MultiPoly], line_sets: Sequence[Sequence[ProjLine]], strict: bool = False) -> ZeroLocusReport:
    """Common zeros of generators that split into lines, compared with ``ps``.

    ``line_sets[k]`` lists the lines whose product is ``gens[k]`` up to scalar
    (checked).  A point of the locus lies on a line of the first generator and
    on a line of some generator not containing that line, so the candidates are
    finitely many line-line meets.
    """
    points = set(ps.points if isinstance(ps, PointSet) else ps)
    sets = [list(s) for s in line_sets]
    for g, s in zip(gens, sets):
        if not _proportional(lines_product(s), g):
            raise MismatchedLocus(f"{g} is not the product of the given lines")
    common = [L for L in sets[0] if all(L in s for s in sets[1:])]
    if common:
        report = ZeroLocusReport(False, [], common, [], [])
        if strict:
            raise MismatchedLocus("the generators share a line, so the locus is not finite")
        return report
    locus: set[ProjPoint] = set()
    for L in sets[0]:
        other = next(s for s in sets[1:] if L not in s)
        for M in other:
            p = meet(L, M)
            if all(any(N.contains(p) for N in s) for s in sets):
                locus.add(p)
    extra = sorted(locus - points, key=lambda p: p.sort_key())
    missing = sorted(points - locus, key=lambda p: p.sort_key())
    report = ZeroLocusReport(not extra and not missing, sorted(locus, key=lambda p: p.sort_key()), [], extra, missing)
    if strict and not report.equal:
        raise MismatchedLocus(f"locus differs: {len(extra)} extra, {len(missing)} missing points")
    return report


# -- containment of intersections ------------------------------------------------
@dataclass
class ContainmentReport:
    status: str  # certified | inconclusive
    seeds: dict  # seed -> bool

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    def to_json(self) -> dict:
        return {"status": self.status, "seeds": {str(k): v for k, v in self.seeds.items()}}


def _squarefree_part(u: UniPoly) -> UniPoly:
    if u.degree <= 0:
        return u
    return u.exact_div(gcd(u, u.derivative()))


def variety_containment(f: MultiPoly, g: MultiPoly, h: MultiPoly, seeds: Sequence[int] = SEEDS) -> ContainmentReport:
    """Sufficient test for V(f, g) in V(h) in generic coordinates.

    After each seeded change of coordinates, the squarefree part of Res_z(f, g)
    must divide Res_z(f, h) (including the root at infinity).
    """
    tower = f.tower
    if not forms_coprime(f, g):
        raise CommonComponent("f and g share a component")
    results = {}
    cache: dict = {}
    for s in seeds:
        proj = _projection(tower, s, cache)
        rg = _pair_resultant(f, g, proj, cache, ("fg", s))
        try:
            rh = _pair_resultant(f, h, proj, cache, ("fh", s))
        except CommonComponent:
            results[s] = True  # V(f) inside V(h) along a shared component is handled by the caller
            continue
        base = _squarefree_part(rg.poly)
        ok = not (rh.poly % base) if base.degree > 0 else True
        if rg.infinity and not rh.infinity:
            ok = False
        results[s] = ok
    status = "certified" if all(results.values()) else "inconclusive"
    return ContainmentReport(status, results)


def intersection_pattern(f: MultiPoly, g: MultiPoly, seeds: Sequence[int] = SEEDS) -> list[int]:
    """Multiplicities of the points of V(f, g), agreed on by two projections."""
    return _stable_pattern(f, g, f.tower, seeds, {}, ("f", "g"))[0]
