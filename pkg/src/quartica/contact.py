"""Local analysis of plane curves at smooth points.

Everything here goes through one device: the exact power-series branch of a
curve at a smooth point.  Composing any other form with that branch gives its
local intersection multiplicity, and composing the six conic monomials gives
a linear system whose kernel is the set of conics with prescribed contact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    ComponentLine,
    DegenerateCurve,
    FieldTooSmall,
    PointNotOnBoth,
    PointNotOnCurve,
    SingularPoint,
)
from .field import FieldElement
from .geometry import Conic, ProjLine, ProjPoint, _CONIC_MONOMIALS, _pivot, restrict_to_line
from .poly import MultiPoly, UniPoly, hessian_determinant, resultant, squarefree_decomposition, tower_roots
from . import linalg


class PlaneCurve:
    """A projective plane curve given by a nonzero homogeneous form."""

    def __init__(self, form: MultiPoly, name: str | None = None):
        if not form or not form.is_homogeneous():
            raise ValueError("a plane curve needs a nonzero homogeneous form")
        self.form = form
        self.tower = form.tower
        self.degree = form.degree()
        self.name = name
        self._grad = [form.diff(k) for k in range(3)]
        self._branches: dict[ProjPoint, BranchSeries] = {}

    def contains(self, p: ProjPoint) -> bool:
        return not self.form.evaluate(p.coords)

    def gradient(self, p: ProjPoint) -> tuple[FieldElement, ...]:
        return tuple(g.evaluate(p.coords) for g in self._grad)

    def is_smooth_at(self, p: ProjPoint) -> bool:
        return any(self.gradient(p))

    def tangent(self, p: ProjPoint) -> ProjLine:
        if not self.contains(p):
            raise PointNotOnCurve(f"{p} is not on the curve")
        g = self.gradient(p)
        if not any(g):
            raise SingularPoint(f"{p} is a singular point")
        return ProjLine(g, self.tower)

    def branch(self, p: ProjPoint, n: int) -> BranchSeries:
        cached = self._branches.get(p)
        if cached is None or cached.order < n:
            cached = branch_series(self, p, n)
            self._branches[p] = cached
        return cached

    def __str__(self) -> str:
        return str(self.form)

    def __repr__(self) -> str:
        return f"PlaneCurve({self.form})"


def _as_form(obj, tower) -> MultiPoly:
    if isinstance(obj, PlaneCurve):
        return obj.form
    if isinstance(obj, (ProjLine, Conic)):
        return obj.form()
    if isinstance(obj, MultiPoly):
        return obj
    raise TypeError(f"cannot use {obj!r} as a curve")


@dataclass
class BranchSeries:
    """Truncated branch y(x) = c1 x + c2 x^2 + ... of a curve at a smooth point.

    ``chart`` is (h, t, s): coordinate h is set to 1, t - t0 is the local
    parameter and s - s0 is solved for as a series in it.
    """

    center: ProjPoint
    chart: tuple[int, int, int]
    coefficients: list  # c_1 .. c_n
    base: tuple  # affine values (t0, s0)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def local_poly(self, form: MultiPoly) -> MultiPoly:
        """form in local coordinates: x-slot is the parameter u, y-slot the solved v."""
        tower = form.tower
        h, t, s = self.chart
        u, v, _ = MultiPoly.gens(tower)
        subs = [None] * 3
        subs[h] = MultiPoly.const(tower, 1)
        subs[t] = u + self.base[0]
        subs[s] = v + self.base[1]
        return form.substitute(subs)

    def compose(self, form: MultiPoly, n: int | None = None) -> list[FieldElement]:
        """Coefficients 0..n of form evaluated along the branch."""
        n = self.order if n is None else n
        if n > self.order:
            raise ValueError("branch not computed to the requested order")
        tower = form.tower
        local = self.local_poly(form)
        dv = max(local.degree_in(1), 0)
        series = [tower.zero] + list(self.coefficients[:n])
        powers = [[tower.one] + [tower.zero] * n]
        for _ in range(dv):
            prev = powers[-1]
            nxt = [tower.zero] * (n + 1)
            for i, a in enumerate(prev):
                if not a:
                    continue
                for j in range(1, n + 1 - i):
                    b = series[j]
                    if b:
                        nxt[i + j] = nxt[i + j] + a * b
            powers.append(nxt)
        out = [tower.zero] * (n + 1)
        for (i, j, _), c in local.terms.items():
            pw = powers[j]
            for k in range(n + 1 - i):
                if pw[k]:
                    out[i + k] = out[i + k] + c * pw[k]
        return out


def _choose_chart(curve: PlaneCurve, p: ProjPoint) -> tuple[int, int, int]:
    h = _pivot(p.coords)
    rest = [k for k in range(3) if k != h]
    grad = curve.gradient(p)
    # solve for the coordinate whose partial derivative is largest in absolute value
    s = max(rest, key=lambda k: (abs(grad[k].embed()) if grad[k] else -1.0, -k))
    if not grad[s]:
        raise SingularPoint(f"{p} is a singular point")
    t = next(k for k in rest if k != s)
    return h, t, s


def branch_series(curve: PlaneCurve, p: ProjPoint, n: int) -> BranchSeries:
    """Exact branch of ``curve`` at the smooth point ``p`` to order ``n``."""
    if p.tower is not curve.tower:
        p = p.lift(curve.tower) if p.tower.is_subtower_of(curve.tower) else p
    if not curve.contains(p):
        raise PointNotOnCurve(f"{p} is not on {curve}")
    if not curve.is_smooth_at(p):
        raise SingularPoint(f"{p} is a singular point of {curve}")
    tower = curve.tower
    h, t, s = _choose_chart(curve, p)
    inv = p.coords[h].inverse()
    base = (p.coords[t] * inv, p.coords[s] * inv)
    stub = BranchSeries(p, (h, t, s), [], base)
    local = stub.local_poly(curve.form)
    a = local.coefficient((0, 1, 0))
    if not a:
        raise SingularPoint(f"{p}: tangent is vertical in the chosen chart")
    ainv = a.inverse()
    dv = max(local.degree_in(1), 0)
    terms = [(e[0], e[1], c) for e, c in local.terms.items()]
    # powers[j][k] = coefficient of u^k in v(u)^j, filled column by column
    powers = [[tower.one] + [tower.zero] * n] + [[tower.zero] * (n + 1) for _ in range(dv)]
    coeffs: list[FieldElement] = []
    for k in range(1, n + 1):
        for j in range(2, dv + 1):
            acc = tower.zero
            for m in range(1, k):
                cm = coeffs[m - 1]
                pv = powers[j - 1][k - m]
                if cm and pv:
                    acc = acc + cm * pv
            powers[j][k] = acc
        total = tower.zero
        for i, j, c in terms:
            if i <= k and (i, j) != (0, 1):
                pv = powers[j][k - i]
                if pv:
                    total = total + c * pv
        ck = -total * ainv
        coeffs.append(ck)
        powers[1][k] = ck
    branch = BranchSeries(p, (h, t, s), coeffs, base)
    residual = branch.compose(curve.form, n)
    if any(residual):
        raise AssertionError("branch series residual does not vanish")
    return branch


@dataclass
class ContactReport:
    point: ProjPoint
    order: int
    witness: UniPoly
    exact: bool = True
    object: str = ""

    def to_json(self) -> dict:
        return {
            "point": str(self.point),
            "order": self.order,
            "exact": self.exact,
            "object": self.object,
        }


def contact_order(curve: PlaneCurve, other, p: ProjPoint, cap: int | None = None) -> ContactReport:
    """Local intersection multiplicity of ``curve`` and ``other`` at ``p``.

    ``curve`` must be smooth at ``p``.  The branch is raised until the order
    is determined; if it vanishes through ``cap`` the report is a lower bound
    (``exact=False``).  The default cap is the Bezout bound.
    """
    if not isinstance(curve, PlaneCurve):
        curve = PlaneCurve(_as_form(curve, None))
    form = _as_form(other, curve.tower)
    if not curve.contains(p) or form.evaluate(p.coords):
        raise PointNotOnBoth(f"{p} does not lie on both curves")
    if not curve.is_smooth_at(p):
        raise SingularPoint(f"{p} is a singular point of {curve}")
    if cap is None:
        cap = curve.degree * max(form.degree(), 1)
    n = 2 * curve.degree + 2
    while True:
        br = curve.branch(p, n)
        coeffs = br.compose(form, n)
        k = next((i for i, c in enumerate(coeffs) if c), None)
        witness = UniPoly(curve.tower, coeffs)
        if k is not None:
            return ContactReport(p, k, witness, True, str(form))
        if n >= cap:
            return ContactReport(p, n + 1, witness, False, str(form))
        n = min(2 * n, cap)


def mtl_verify(curve: PlaneCurve, line: ProjLine) -> tuple[bool, ProjPoint | None]:
    """Is ``line`` a maximal tangency line of ``curve``?  Returns (answer, tangency point)."""
    r = restrict_to_line(curve.form, line)
    g = r.poly
    if not g:
        raise ComponentLine(f"{line} is a component of the curve")
    d = r.degree
    if g.degree == 0:
        return True, r.point(None)
    if g.degree < d:
        return False, None
    lc = g.lc()
    root = -g[d - 1] / (lc * d)
    target = UniPoly(curve.tower, [-root, 1]) ** d * lc
    if g == target:
        return True, r.point(root)
    return False, None


def hessian(curve: PlaneCurve) -> PlaneCurve:
    if curve.degree < 3:
        raise DegenerateCurve("the Hessian is only taken for curves of degree >= 3")
    return PlaneCurve(hessian_determinant(curve.form), name="hessian")


@dataclass
class FlexScheme:
    points: list  # of (ProjPoint, multiplicity)
    total: int
    expected: int
    pattern: list  # squarefree pattern of the projected resultant: (degree, multiplicity)
    complete: bool

    @property
    def certified(self) -> bool:
        return self.complete and self.total == self.expected


def intersection_points(c1: PlaneCurve, c2: PlaneCurve) -> tuple[list, list]:
    """Points of c1 and c2 with local multiplicities (c1 must be smooth there).

    Projects from (0:0:1) via Res_z; the centre itself is handled separately.
    Raises FieldTooSmall (with the resultant pattern) when some point is not
    defined over the tower.
    """
    tower = c1.tower
    R = resultant(c1.form, c2.form, "z")
    if not R:
        raise ValueError("the curves share a component")
    coeffs = [tower.zero] * (R.degree() + 1)
    for e, c in R.terms.items():
        coeffs[e[0]] = c
    u = UniPoly(tower, coeffs)
    pattern = [(f.degree, m) for f, m in squarefree_decomposition(u)]
    inf = R.degree() - u.degree
    if inf:
        pattern.append((1, inf))
    directions = [r for r, _ in tower_roots(u)] if u.degree > 0 else []
    fibers = [(r, tower.one) for r in directions]
    if inf:
        fibers.append((tower.one, tower.zero))
    found: set[ProjPoint] = set()
    for a, b in fibers:
        # line through (0:0:1) and (a:b:0): points (a*s : b*s : 1) and (a:b:0)
        base = (tower.zero, tower.zero, tower.one)
        direc = (a, b, tower.zero)
        g1 = c1.form.along(base, direc)
        g2 = c2.form.along(base, direc)
        from .poly import gcd

        g = g1 if not g2 else (g2 if not g1 else gcd(g1, g2))
        if g and g.degree > 0:
            for s, _ in tower_roots(g):
                found.add(ProjPoint([a * s, b * s, tower.one], tower))
        # the point (a:b:0) at s = infinity
        top = ProjPoint([a, b, tower.zero], tower)
        if c1.contains(top) and c2.contains(top):
            found.add(top)
    centre = ProjPoint([0, 0, 1], tower)
    if c1.contains(centre) and c2.contains(centre):
        found.add(centre)
    pts = sorted(found, key=lambda p: p.sort_key())
    return [(p, contact_order(c1, c2, p).order) for p in pts], pattern


def flex_scheme(curve: PlaneCurve) -> FlexScheme:
    """Intersection of the curve with its Hessian, certified against 3d(d-2)."""
    H = hessian(curve)
    expected = curve.degree * H.degree
    try:
        pts, pattern = intersection_points(curve, H)
    except FieldTooSmall as exc:
        pattern = [(f.degree, m) for f, m in (exc.pattern or [])]
        return FlexScheme([], 0, expected, pattern, False)
    total = sum(m for _, m in pts)
    return FlexScheme(pts, total, expected, pattern, True)


# -- conics with prescribed contact --------------------------------------------
def _conic_monomial_forms(tower):
    return [MultiPoly(tower, {m: tower.one}) for m in _CONIC_MONOMIALS]


def conic_jet_rows(curve: PlaneCurve, p: ProjPoint, k: int) -> list[list[FieldElement]]:
    """Rows r_0..r_{k-1}: r_j[m] = coefficient of u^j of conic monomial m along the branch."""
    br = curve.branch(p, max(k, 1))
    cols = [br.compose(f, k - 1) for f in _conic_monomial_forms(curve.tower)]
    return [[cols[m][j] for m in range(6)] for j in range(k)]


def _conic_from_vector(v, tower) -> Conic:
    return Conic.from_coefficients(tower, v)


def osculating_conic(curve: PlaneCurve, p: ProjPoint) -> tuple[Conic, int]:
    """The conic of highest contact at p, with its contact order."""
    if curve.degree <= 2:
        raise DegenerateCurve("osculating conics are taken for curves of degree >= 3")
    rows = conic_jet_rows(curve, p, 6)
    ker6 = linalg.kernel(rows, curve.tower, 6)
    ker = ker6 or linalg.kernel(rows[:5], curve.tower, 6)
    conic = _conic_from_vector(ker[0], curve.tower)
    return conic, contact_order(curve, conic, p).order


@dataclass
class SextacticReport:
    point: ProjPoint
    classification: str  # not_sextactic | improper | proper
    conic: Conic | None
    contact: int | None
    kernel_dimension: int


def sextactic_classify(curve: PlaneCurve, p: ProjPoint) -> SextacticReport:
    if curve.degree <= 2:
        raise DegenerateCurve("sextactic points are defined for curves of degree >= 3")
    rows = conic_jet_rows(curve, p, 6)
    ker = linalg.kernel(rows, curve.tower, 6)
    if not ker:
        return SextacticReport(p, "not_sextactic", None, None, 0)
    candidates = list(ker)
    if len(ker) > 1:
        total = [sum(vals, curve.tower.zero) for vals in zip(*ker)]
        candidates.append(total)
    for v in candidates:
        conic = _conic_from_vector(v, curve.tower)
        if conic.rank() >= 2:
            order = contact_order(curve, conic, p).order
            if order >= 6:
                return SextacticReport(p, "proper", conic, order, len(ker))
    conic = _conic_from_vector(ker[0], curve.tower)
    order = contact_order(curve, conic, p).order
    kind = "improper" if all(_conic_from_vector(v, curve.tower).rank() == 1 for v in ker) else "not_sextactic"
    return SextacticReport(p, kind, conic, order, len(ker))


def biosculating_conics(curve: PlaneCurve, pts: Sequence[ProjPoint], order: int = 4) -> list[tuple[Conic, ProjPoint, ProjPoint]]:
    """Reduced conics with contact >= ``order`` at two of the given points."""
    tower = curve.tower
    jets = {}
    for p in pts:
        red, _ = linalg.row_reduce(conic_jet_rows(curve, p, order), tower)
        jets[p] = red
    found: dict[Conic, tuple[Conic, ProjPoint, ProjPoint]] = {}
    for p, q in combinations(pts, 2):
        ker = linalg.kernel(jets[p] + jets[q], tower, 6)
        if len(ker) != 1:
            continue
        conic = _conic_from_vector(ker[0], tower)
        if conic in found or conic.rank() < 2:
            continue
        if contact_order(curve, conic, p).order >= order and contact_order(curve, conic, q).order >= order:
            found[conic] = (conic, p, q)
    return list(found.values())
