from __future__ import annotations

from math import comb

import pytest

from quartica.atlas import FERMAT_CONICS, KK, get, tower
from quartica.census import (
    Projection,
    conic_census,
    conic_pair_pattern,
    octic_membership,
    projected_resultant,
    triple_coincidence,
)
from quartica.errors import CommonComponent, UnexplainedCoincidence
from quartica.field import QQ
from quartica.geometry import Conic, ProjPoint
from quartica.poly import MultiPoly

X, Y, Z = MultiPoly.gens(QQ)


def _conic(f):
    return Conic.from_form(f)


def test_projection_preserves_total_degree():
    f, g = X**2 + Y**2 - Z**2, X**2 - 2 * Y**2 + Z**2
    for seed in (1, 2, 3):
        r = projected_resultant(f, g, Projection(QQ, seed))
        assert sum(r.pattern()) == 4


def test_pair_patterns():
    circle = _conic(X**2 + Y**2 - Z**2)
    # tangent at (0 : 1 : 1) and (0 : -1 : 1)
    assert sorted(conic_pair_pattern(circle, _conic(X**2 + 4 * Y**2 - 4 * Z**2)).pattern) == [2, 2]
    # transversal in four points
    assert sorted(conic_pair_pattern(circle, _conic(4 * X**2 + Y**2 - 2 * Z**2)).pattern) == [1, 1, 1, 1]
    # tangent at (1 : 0 : 1), transversal at two more points
    assert sorted(conic_pair_pattern(circle, _conic(X**2 + Y**2 - Z**2 + Y * (X - Z) + Y**2)).pattern) == [1, 1, 2]
    # adding the square of the tangent at (1 : 0 : 1) gives contact 4 there
    osc = _conic(X**2 + Y**2 - Z**2 + (X - Z) ** 2)
    assert conic_pair_pattern(circle, osc).pattern == [4]


def test_pair_pattern_against_direct_count():
    a = _conic(X * Y - Z**2)
    b = _conic(X**2 - Y * Z)
    # x y = z^2 and x^2 = y z meet at (1:1:1), cube roots of unity images and (0:1:0) type points
    pattern = conic_pair_pattern(a, b).pattern
    assert sum(pattern) == 4


def test_triple_point_must_be_claimed():
    conics = [_conic(X**2 + Y**2 - Z**2), _conic(X**2 + 2 * Y**2 - Z**2), _conic(X**2 + 3 * Y**2 - Z**2 + X * Y)]
    # all three pass through (1 : 0 : 1) and (-1 : 0 : 1)
    with pytest.raises(UnexplainedCoincidence):
        conic_census(conics)
    cen = conic_census(conics, [ProjPoint([1, 0, 1], QQ), ProjPoint([-1, 0, 1], QQ)])
    assert cen.ledger["total"] == 4 * comb(3, 2)


def test_triple_coincidence_certificate():
    q1 = _conic(X**2 + Y**2 - Z**2)
    q2 = _conic(X**2 + 2 * Y**2 - Z**2)
    q3 = _conic(X**2 - Y**2 - Z**2 + X * Y)
    cert = triple_coincidence(q1, q2, q3)
    assert set(cert.points) == {ProjPoint([1, 0, 1], QQ), ProjPoint([-1, 0, 1], QQ)}
    assert cert.unresolved == 0


def test_duplicate_conics():
    q = _conic(X**2 + Y**2 - Z**2)
    with pytest.raises(CommonComponent):
        conic_census([q, _conic(2 * X**2 + 2 * Y**2 - 2 * Z**2)])


def test_kk_six_conic_census():
    cen = conic_census(get("kk.conics6", tower(KK)))
    assert cen.status == "conclusive"
    assert cen.ledger["distinct"] == cen.ledger["simple"] == 60
    assert cen.ledger["total"] == 4 * comb(6, 2)


def test_kk_twelve_conic_census_tangencies():
    T = tower(KK)
    s = get("kk.sextactic1", T)
    cen = conic_census(get("kk.conics12", T), [(p, 2) for p in s])
    led = cen.ledger
    assert {sp.point for sp in cen.special_points} == set(s)
    assert all(len(sp.conics) == 2 for sp in cen.special_points)
    # every multiplicity is accounted for in the ledger
    assert led["total"] == 4 * comb(12, 2)
    assert led["simple"] == 216 and led["distinct"] == 228


def test_fermat_octics():
    T = tower(FERMAT_CONICS)
    tac, quad = get("fermat.tacnodes", T), get("fermat.quadruple", T)
    o1, o2 = get("fermat.octic_tacnode", T), get("fermat.octic_quadruple", T)
    assert octic_membership(tac, o1).certified
    assert octic_membership(quad, o2).certified
    assert not octic_membership(tac[1:], o1).certified
    assert not octic_membership(quad, o1).certified


@pytest.mark.slow
def test_fermat_conic_census():
    T = tower(FERMAT_CONICS)
    claims = [(p, 2) for p in get("fermat.tacnodes", T)] + [(p, 4) for p in get("fermat.quadruple", T)]
    cen = conic_census(get("fermat.conics", T), claims)
    led = cen.ledger
    assert cen.status == "conclusive"
    assert (led["distinct"], led["simple"], led["tacnode"], led["quadruple"]) == (960, 912, 24, 24)
    assert led["total"] == 1104 == 4 * comb(24, 2)
    # a tacnode carries one pair of contact 2, a quadruple point six transversal pairs
    assert led["simple"] + 2 * led["tacnode"] + 6 * led["quadruple"] == led["total"]
