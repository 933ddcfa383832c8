"""Projective points, lines and conics; duality, incidence, cross-ratio and line censuses."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import DegenerateInput, IdenticalInputs, NotCollinear, NotDistinct, TowerMismatch
from .field import FieldElement, TowerField
from .poly import MultiPoly, UniPoly
from . import linalg


def _normalize(coords: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    lead = next((c for c in coords if c), None)
    if lead is None:
        raise ValueError("all-zero homogeneous coordinates")
    if lead == 1:
        return tuple(coords)
    inv = lead.inverse()
    return tuple(c * inv for c in coords)


def _pivot(coords: Sequence[FieldElement]) -> int:
    """Index of the coordinate with largest embedded absolute value (ties: first)."""
    best, best_abs = 0, -1.0
    for k, c in enumerate(coords):
        a = abs(c.embed()) if c else 0.0
        if a > best_abs * (1 + 1e-12) + 1e-300:
            best, best_abs = k, a
    return best


class _Homogeneous:
    __slots__ = ("coords", "tower")

    def __init__(self, coords: Sequence, tower: TowerField | None = None):
        if tower is None:
            tower = next(c.tower for c in coords if isinstance(c, FieldElement))
        cs = [tower.coerce(c) for c in coords]
        if len(cs) != 3:
            raise ValueError("expected three homogeneous coordinates")
        self.coords = _normalize(cs)
        self.tower = tower

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def lift(self, tower: TowerField):
        return type(self)([tower.lift(c) for c in self.coords], tower)

    def embed(self) -> tuple[complex, complex, complex]:
        return tuple(c.embed() for c in self.coords)

    def sort_key(self):
        return tuple(tuple(c.coords) for c in self.coords)


class ProjPoint(_Homogeneous):
    """A point of the projective plane, first nonzero coordinate normalized to 1."""

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"ProjPoint{self}"

    def to_json(self) -> str:
        return str(self)


class ProjLine(_Homogeneous):
    """The line a*x + b*y + c*z = 0, coefficients normalized like points."""

    @classmethod
    def from_form(cls, form: MultiPoly) -> ProjLine:
        if form.degree() != 1 or not form.is_homogeneous():
            raise ValueError(f"{form} is not a linear form")
        return cls([form.coefficient(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))], form.tower)

    def form(self) -> MultiPoly:
        return MultiPoly.linear(self.tower, self.coords)

    def contains(self, p: ProjPoint) -> bool:
        return not sum((a * b for a, b in zip(self.coords, p.coords)), self.tower.zero)

    def __str__(self) -> str:
        return str(self.form())

    def __repr__(self) -> str:
        return f"ProjLine({self})"

    def to_json(self) -> str:
        return str(self)


_CONIC_MONOMIALS = ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2))


class Conic:
    """A conic given by its symmetric Gram matrix, normalized so the first nonzero entry is 1."""

    __slots__ = ("gram", "tower")

    def __init__(self, gram: Sequence[Sequence], tower: TowerField | None = None):
        if tower is None:
            tower = next(c.tower for row in gram for c in row if isinstance(c, FieldElement))
        g = [[tower.coerce(c) for c in row] for row in gram]
        for a in range(3):
            for b in range(3):
                if g[a][b] != g[b][a]:
                    raise ValueError("Gram matrix must be symmetric")
        flat = _normalize([c for row in g for c in row])
        self.gram = tuple(tuple(flat[3 * a : 3 * a + 3]) for a in range(3))
        self.tower = tower

    @classmethod
    def from_form(cls, form: MultiPoly) -> Conic:
        if form.degree() != 2 or not form.is_homogeneous():
            raise ValueError(f"{form} is not a quadratic form")
        a, b, c, d, e, f = (form.coefficient(m) for m in _CONIC_MONOMIALS)
        half = form.tower.from_rational(1) / 2
        gram = [[a, b * half, d * half], [b * half, c, e * half], [d * half, e * half, f]]
        return cls(gram, form.tower)

    @classmethod
    def from_coefficients(cls, tower: TowerField, coeffs: Sequence) -> Conic:
        """From (a, b, c, d, e, f) of a x^2 + b xy + c y^2 + d xz + e yz + f z^2."""
        form = MultiPoly(tower, {m: tower.coerce(c) for m, c in zip(_CONIC_MONOMIALS, coeffs)})
        return cls.from_form(form)

    def form(self) -> MultiPoly:
        g = self.gram
        coeffs = (g[0][0], 2 * g[0][1], g[1][1], 2 * g[0][2], 2 * g[1][2], g[2][2])
        return MultiPoly(self.tower, dict(zip(_CONIC_MONOMIALS, coeffs)))

    def coefficients(self) -> tuple[FieldElement, ...]:
        f = self.form()
        return tuple(f.coefficient(m) for m in _CONIC_MONOMIALS)

    def rank(self) -> int:
        return linalg.rank(self.gram, self.tower)

    def is_reduced(self) -> bool:
        return self.rank() >= 2

    def contains(self, p: ProjPoint) -> bool:
        return not self.form().evaluate(p.coords)

    def lift(self, tower: TowerField) -> Conic:
        return Conic([[tower.lift(c) for c in row] for row in self.gram], tower)

    def __eq__(self, other) -> bool:
        return isinstance(other, Conic) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __str__(self) -> str:
        return str(self.form())

    def __repr__(self) -> str:
        return f"Conic({self})"

    def to_json(self) -> str:
        return str(self)


# -- duality, incidence ------------------------------------------------------
def dualize(obj):
    """Point (a:b:c) <-> line ax + by + cz = 0."""
    if isinstance(obj, ProjPoint):
        return ProjLine(obj.coords, obj.tower)
    if isinstance(obj, ProjLine):
        return ProjPoint(obj.coords, obj.tower)
    if isinstance(obj, (list, tuple)):
        return [dualize(o) for o in obj]
    raise TypeError(f"cannot dualize {obj!r}")


def _cross(u, v, tower):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1.tower is not l2.tower:
        raise TowerMismatch("lines over different towers")
    if l1 == l2:
        raise IdenticalInputs("the lines coincide")
    return ProjPoint(_cross(l1.coords, l2.coords, l1.tower), l1.tower)


def join(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    if p1.tower is not p2.tower:
        raise TowerMismatch("points over different towers")
    if p1 == p2:
        raise IdenticalInputs("the points coincide")
    return ProjLine(_cross(p1.coords, p2.coords, p1.tower), p1.tower)


def collinear(points: Sequence[ProjPoint]) -> bool:
    if len(points) < 3:
        return True
    L = join(points[0], next(p for p in points[1:] if p != points[0]))
    return all(L.contains(p) for p in points)


# -- cross-ratio -------------------------------------------------------------
def cross_ratio(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint, drop: int | None = None) -> FieldElement:
    """CR(p1, p2; p3, p4) = ((p1-p3)(p2-p4)) / ((p1-p4)(p2-p3)) on the common line.

    Points are read in the chart obtained by dropping coordinate ``drop`` of the
    ambient plane; by default the coordinate where the common line's
    coefficient has the largest embedded absolute value.
    """
    pts = (p1, p2, p3, p4)
    if len(set(pts)) < 4:
        raise NotDistinct("cross-ratio needs four distinct points")
    L = join(p1, p2)
    if not all(L.contains(p) for p in pts):
        raise NotCollinear("the four points are not collinear")
    if drop is None:
        drop = _pivot(L.coords)
    if not L.coords[drop]:
        raise ValueError("cannot drop a coordinate along which the line is vertical")
    k, l = [j for j in range(3) if j != drop]

    def br(a, b):
        return a[k] * b[l] - a[l] * b[k]

    return (br(p1, p3) * br(p2, p4)) / (br(p1, p4) * br(p2, p3))


def is_harmonic(p1, p2, p3, p4) -> bool:
    """True when some ordering of the four points has cross-ratio -1."""
    cr = cross_ratio(p1, p2, p3, p4)
    return cr == -1 or cr == 2 or cr * 2 == 1


# -- line arrangements -------------------------------------------------------
@dataclass
class LineCensus:
    lines: list
    points: list  # of (ProjPoint, frozenset of line indices)
    t_vector: list = field(default_factory=list)

    def pn(self, n) -> list[ProjPoint]:
        """Points where exactly k lines meet, for k in n (an int or a collection)."""
        ks = {n} if isinstance(n, int) else set(n)
        return [p for p, idx in self.points if len(idx) in ks]

    def multiplicity(self, p: ProjPoint) -> int:
        for q, idx in self.points:
            if q == p:
                return len(idx)
        return 0

    def bezout_identity(self) -> bool:
        d = len(self.lines)
        total = sum(t * comb(k, 2) for k, t in enumerate(self.t_vector, start=2))
        return total == comb(d, 2)

    def to_json(self) -> dict:
        return {
            "t_vector": list(self.t_vector),
            "points": [{"point": str(p), "lines": sorted(idx)} for p, idx in self.points],
        }


def line_census(lines: Sequence[ProjLine]) -> LineCensus:
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DegenerateInput("duplicate lines in arrangement")
    incid: dict[ProjPoint, set] = {}
    for a, b in combinations(range(len(lines)), 2):
        p = meet(lines[a], lines[b])
        incid.setdefault(p, set()).update((a, b))
    points = sorted(((p, frozenset(s)) for p, s in incid.items()), key=lambda t: (-len(t[1]), sorted(t[1])))
    top = max((len(s) for _, s in points), default=1)
    t_vector = [sum(1 for _, s in points if len(s) == k) for k in range(2, top + 1)]
    census = LineCensus(lines, points, t_vector)
    if not census.bezout_identity():
        raise AssertionError("pairwise incidence count does not match C(d, 2)")
    return census


# -- restriction of a form to a line -----------------------------------------
@dataclass
class LineRestriction:
    """p restricted to the line, as g(s) = p(s*A + B); ``degree`` is deg p.

    ``degree - poly.degree`` is the order of vanishing at the point A
    (parameter s = infinity).
    """

    poly: UniPoly
    degree: int
    A: tuple
    B: tuple

    def point(self, s) -> ProjPoint:
        tower = self.poly.tower
        if s is None:
            return ProjPoint(self.A, tower)
        return ProjPoint([s * a + b for a, b in zip(self.A, self.B)], tower)

    @property
    def order_at_infinity(self) -> int:
        return self.degree - self.poly.degree


def line_frame(L: ProjLine) -> tuple[tuple, tuple]:
    """Two points A, B spanning L, from the standard basis vectors (pivot rule)."""
    tower = L.tower
    p = _pivot(L.coords)
    q1, q2 = [j for j in range(3) if j != p]
    inv = L.coords[p].inverse()
    A = [tower.zero] * 3
    B = [tower.zero] * 3
    A[q1] = tower.one
    A[p] = -L.coords[q1] * inv
    B[q2] = tower.one
    B[p] = -L.coords[q2] * inv
    return tuple(A), tuple(B)


def restrict_to_line(p: MultiPoly, L: ProjLine) -> LineRestriction:
    from .errors import NotHomogeneous

    if not p.is_homogeneous():
        raise NotHomogeneous(f"{p} is not homogeneous")
    if p.tower is not L.tower:
        raise TowerMismatch("polynomial and line over different towers")
    A, B = line_frame(L)
    return LineRestriction(p.along(B, A), p.degree(), A, B)
