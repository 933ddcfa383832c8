from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quartica.atlas import FERMAT, KK, get, tower
from quartica.contact import (
    PlaneCurve,
    biosculating_conics,
    branch_series,
    contact_order,
    flex_scheme,
    hessian,
    mtl_verify,
    osculating_conic,
    sextactic_classify,
)
from quartica.errors import DegenerateCurve, PointNotOnBoth, PointNotOnCurve, SingularPoint
from quartica.field import QQ, make_tower
from quartica.geometry import Conic, ProjLine, ProjPoint, join, line_frame
from quartica.ideals import monomials
from quartica.poly import MultiPoly

X, Y, Z = MultiPoly.gens(QQ)


@st.composite
def curve_through_point(draw):
    """A random curve of degree 3 or 4 forced through a random rational point."""
    d = draw(st.integers(3, 4))
    p = ProjPoint(list(draw(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3)))), QQ)
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=len(monomials(d)), max_size=len(monomials(d))))
    g = MultiPoly(QQ, {e: QQ.from_rational(c) for e, c in zip(monomials(d), coeffs) if c})
    assume(g)
    zd = Z**d
    f = g - zd * (g.evaluate(p.coords) / zd.evaluate(p.coords))
    assume(f and f.is_homogeneous() and f.degree() == d)
    curve = PlaneCurve(f)
    assume(curve.is_smooth_at(p))
    return curve, p


@settings(max_examples=60, deadline=None, derandomize=True)
@given(curve_through_point(), st.integers(3, 8))
def test_branch_residual_vanishes(cp, n):
    curve, p = cp
    b = branch_series(curve, p, n)
    assert all(not c for c in b.compose(curve.form, n))


@settings(max_examples=40, deadline=None, derandomize=True)
@given(curve_through_point())
def test_tangent_and_transversal_contact(cp):
    curve, p = cp
    L = curve.tangent(p)
    assume(not (curve.form.degree() and _divides_line(curve, L)))
    assert contact_order(curve, L, p).order >= 2
    q = next(ProjPoint(list(c), QQ) for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1)) if not L.contains(ProjPoint(list(c), QQ)))
    assert contact_order(curve, join(p, q), p).order == 1


def _divides_line(curve, L) -> bool:
    """True when L is a component of the curve (contact is then undefined)."""
    A, B = line_frame(L)
    return all(not curve.form.evaluate([s * a + b for a, b in zip(A, B)]) for s in range(curve.degree + 1))


def test_branch_of_a_circle():
    circle = PlaneCurve(X**2 + Y**2 - Z**2)
    b = branch_series(circle, ProjPoint([0, 1, 1], QQ), 4)
    # chart y = 1: z = sqrt(1 + x^2) = 1 + x^2/2 - x^4/8 + ...
    assert b.chart == (1, 0, 2)
    assert [c.rational() for c in b.coefficients] == [0, Fraction(1, 2), 0, Fraction(-1, 8)]


def test_branch_errors():
    nodal = PlaneCurve(Y**2 * Z - X**2 * (X + Z))
    with pytest.raises(SingularPoint):
        branch_series(nodal, ProjPoint([0, 0, 1], QQ), 3)
    with pytest.raises(PointNotOnCurve):
        branch_series(nodal, ProjPoint([1, 1, 1], QQ), 3)


def test_contact_of_circle_with_lines():
    circle = PlaneCurve(X**2 + Y**2 - Z**2)
    p = ProjPoint([0, 1, 1], QQ)
    assert contact_order(circle, ProjLine([0, 1, -1], QQ), p).order == 2
    assert contact_order(circle, ProjLine([1, 1, -1], QQ), p).order == 1
    with pytest.raises(PointNotOnBoth):
        contact_order(circle, ProjLine([0, 0, 1], QQ), p)


def test_fermat_mtls_have_contact_four():
    T = tower(FERMAT)
    F = get("fermat.quartic", T)
    pts = set(get("fermat.mtp", T))
    for L in get("fermat.mtl", T):
        ok, P = mtl_verify(F, L)
        assert ok and P in pts
        assert contact_order(F, L, P).order == 4
    assert not mtl_verify(F, ProjLine([1, 1, 1], T))[0]


def test_kk_mtls():
    T = tower(KK)
    K = get("kk.quartic", T)
    for L, P in zip(get("kk.mtl", T), get("kk.mtp", T)):
        ok, Q = mtl_verify(K, L)
        assert ok and Q == P


def test_fermat_hessian_and_flexes():
    T = tower(FERMAT)
    F = get("fermat.quartic", T)
    x, y, z = MultiPoly.gens(T)
    assert hessian(F).form == 1728 * x**2 * y**2 * z**2
    scheme = flex_scheme(F)
    assert scheme.certified and scheme.total == 24
    assert {p for p, _ in scheme.points} == set(get("fermat.mtp", T))
    assert {m for _, m in scheme.points} == {2}


def test_osculating_conic_needs_degree_three():
    with pytest.raises(DegenerateCurve):
        osculating_conic(PlaneCurve(X**2 + 2 * Y**2 - 3 * Z**2), ProjPoint([1, 1, 1], QQ))


def test_osculating_conic_of_a_cubic():
    cubic = PlaneCurve(Y**2 * Z - X**3 - X * Z**2 - Z**3)  # passes through (0 : 1 : 1)
    p = ProjPoint([0, 1, 1], QQ)
    conic, order = osculating_conic(cubic, p)
    assert conic.contains(p) and order >= 5
    assert contact_order(cubic, conic, p).order == order


def test_fermat_sextactic_classification():
    T = tower(FERMAT)
    F = get("fermat.quartic", T)
    sext = get("fermat.sextactic", T)
    assert len(sext) == 48
    reports = [sextactic_classify(F, p) for p in sext]
    assert {r.classification for r in reports} == {"proper"}
    for p in get("fermat.mtp", T):
        r = sextactic_classify(F, p)
        L = F.tangent(p)
        assert r.classification == "improper"
        assert r.conic == Conic.from_form(L.form() * L.form())
        assert r.contact == 8


def test_ordinary_point_is_not_sextactic():
    # fourth powers 1, -4, 3 are pairwise distinct, so the point is off every listed family
    T = make_tower("Q(i:-1,s3:3,f3:s3)")
    x, y, z = MultiPoly.gens(T)
    F = PlaneCurve(x**4 + y**4 + z**4)
    p = ProjPoint([1, T.parse("1+i"), T.gen("f3")], T)
    assert F.contains(p)
    assert sextactic_classify(F, p).classification == "not_sextactic"


def test_biosculating_conics_of_fermat():
    T = tower(FERMAT)
    F = get("fermat.quartic", T)
    found = biosculating_conics(F, get("fermat.sextactic", T))
    assert {q for q, _, _ in found} == set(get("fermat.conics", T))
    for q, a, b in found:
        assert contact_order(F, q, a).order == 4 and contact_order(F, q, b).order == 4


def test_biosculating_conics_of_kk():
    T = tower(KK)
    K = get("kk.quartic", T)
    assert {q for q, _, _ in biosculating_conics(K, get("kk.sextactic1", T))} == set(get("kk.conics12", T))
    assert {q for q, _, _ in biosculating_conics(K, get("kk.sextactic2", T))} == set(get("kk.conics6", T))
