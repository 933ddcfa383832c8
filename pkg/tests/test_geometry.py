from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from quartica.atlas import FERMAT, get, tower
from quartica.errors import DegenerateInput, IdenticalInputs, NotCollinear, NotDistinct
from quartica.field import QQ, make_tower
from quartica.geometry import (
    Conic,
    ProjLine,
    ProjPoint,
    collinear,
    cross_ratio,
    dualize,
    is_harmonic,
    join,
    line_census,
    meet,
    restrict_to_line,
)
from quartica.poly import MultiPoly, vanishing_order

GAUSS = make_tower("Q(i:-1)")
coords = st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)).filter(any)


def _pt(c, T=QQ):
    return ProjPoint(list(c), T)


def _ln(c, T=QQ):
    return ProjLine(list(c), T)


@given(coords)
def test_dual_is_an_involution(c):
    p = _pt(c)
    assert dualize(dualize(p)) == p
    assert isinstance(dualize(p), ProjLine)


@settings(max_examples=200)
@given(coords, coords)
def test_duality_preserves_incidence(a, b):
    p, L = _pt(a), _ln(b)
    assert L.contains(p) == dualize(p).contains(dualize(L))


@settings(max_examples=200)
@given(coords, coords)
def test_join_and_meet_are_dual(a, b):
    p, q = _pt(a), _pt(b)
    assume(p != q)
    L = join(p, q)
    assert L.contains(p) and L.contains(q)
    assert dualize(L) == meet(dualize(p), dualize(q))


def test_identical_inputs():
    with pytest.raises(IdenticalInputs):
        join(_pt((1, 2, 3)), _pt((2, 4, 6)))
    with pytest.raises(IdenticalInputs):
        meet(_ln((1, 0, 0)), _ln((3, 0, 0)))


def test_points_are_projective():
    assert _pt((1, 2, 3)) == _pt((-2, -4, -6))
    assert hash(_pt((1, 2, 3))) == hash(_pt((3, 6, 9)))
    with pytest.raises(ValueError):
        _pt((0, 0, 0))


def _four_on_line(L, params, T):
    A = ProjPoint([T.one, T.zero, -L.coords[0] / L.coords[2]], T)
    B = ProjPoint([T.zero, T.one, -L.coords[1] / L.coords[2]], T)
    return [ProjPoint([s * a + b for a, b in zip(A.coords, B.coords)], T) for s in params]


@settings(max_examples=200)
@given(st.tuples(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5)), st.lists(st.integers(-9, 9), min_size=4, max_size=4, unique=True))
def test_cross_ratio_chart_invariance(c, params):
    L = _ln(c)
    pts = _four_on_line(L, params, QQ)
    values = {cross_ratio(*pts, drop=k) for k in range(3)}
    assert len(values) == 1
    a, b, cc, d = params
    assert values.pop() == QQ.from_rational(Fraction((a - cc) * (b - d), (a - d) * (b - cc)))


def test_cross_ratio_projective_invariance():
    T = tower(FERMAT)
    axis = [p for p in get("fermat.mtp", T) if not p.coords[2]]
    M = ((1, 2, 3), (0, 1, 5), (2, 0, 1))
    moved = [ProjPoint([sum(m * c for m, c in zip(row, p.coords)) for row in M], T) for p in axis]
    assert cross_ratio(*axis) == cross_ratio(*moved)


def test_harmonic_four_on_the_axes():
    T = tower(FERMAT)
    pts = get("fermat.mtp", T)
    for k in range(3):
        assert is_harmonic(*[p for p in pts if not p.coords[k]])
    assert not is_harmonic(*_four_on_line(_ln((1, 1, 1)), [0, 1, 2, 3], QQ))


def test_cross_ratio_errors():
    with pytest.raises(NotCollinear):
        cross_ratio(_pt((1, 0, 0)), _pt((0, 1, 0)), _pt((0, 0, 1)), _pt((1, 1, 1)))
    p = _pt((1, 0, 0))
    with pytest.raises(NotDistinct):
        cross_ratio(p, p, _pt((0, 1, 0)), _pt((1, 1, 0)))


@settings(max_examples=100, deadline=None)
@given(st.lists(coords, min_size=2, max_size=8))
def test_bezout_ledger_on_random_arrangements(cs):
    lines = list(dict.fromkeys(_ln(c) for c in cs))
    assume(len(lines) >= 2)
    census = line_census(lines)
    d = len(lines)
    assert sum(t * comb(k, 2) for k, t in enumerate(census.t_vector, start=2)) == comb(d, 2)
    assert census.bezout_identity()


def test_duplicate_lines_are_rejected():
    with pytest.raises(DegenerateInput):
        line_census([_ln((1, 0, 0)), _ln((2, 0, 0)), _ln((0, 1, 0))])


def test_census_of_a_pencil_and_a_triangle():
    pencil = [_ln((1, k, 0)) for k in range(4)]
    assert line_census(pencil).t_vector == [0, 0, 1]
    triangle = [_ln((1, 0, 0)), _ln((0, 1, 0)), _ln((0, 0, 1))]
    assert line_census(triangle).t_vector == [3]


def test_fermat_mtl_census():
    T = tower(FERMAT)
    census = line_census(get("fermat.mtl", T))
    assert census.t_vector == [48, 0, 3]
    assert set(census.pn(4)) == {_pt(c, T) for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1))}


def test_restriction_to_line_gives_multiplicities():
    x, y, z = MultiPoly.gens(QQ)
    f = x**2 * (x - z) * (y - 2 * z)
    r = restrict_to_line(f, _ln((0, 1, 0)))  # y = 0
    mult = {r.point(s): vanishing_order(r.poly, s) for s in range(-3, 4)}
    if r.order_at_infinity:
        mult[r.point(None)] = r.order_at_infinity
    mult = {p: m for p, m in mult.items() if m}
    assert mult == {_pt((0, 0, 1)): 2, _pt((1, 0, 1)): 1, _pt((1, 0, 0)): 1}


def test_conic_from_form_and_rank():
    x, y, z = MultiPoly.gens(GAUSS)
    q = Conic.from_form(x**2 + y**2 + z**2)
    assert q.rank() == 3 and q.form() == x**2 + y**2 + z**2
    assert Conic.from_form((x - y) * (x + y)).rank() == 2
    assert Conic.from_form((x - y) ** 2).rank() == 1
    assert q.contains(ProjPoint([1, GAUSS.parse("i"), 0], GAUSS))
    assert Conic.from_form(2 * x * y) == Conic.from_form(x * y)


def test_collinear():
    assert collinear([_pt((1, 0, 0)), _pt((0, 1, 0)), _pt((1, 1, 0))])
    assert not collinear([_pt((1, 0, 0)), _pt((0, 1, 0)), _pt((0, 0, 1))])
