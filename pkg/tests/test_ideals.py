from __future__ import annotations

from math import comb

import pytest

from quartica.atlas import FERMAT, KK, get, tower
from quartica.errors import CertificateFailure, SpecInconsistent
from quartica.field import QQ
from quartica.geometry import ProjPoint, line_census
from quartica.ideals import (
    BettiSpec,
    PointSet,
    forms_coprime,
    generator_counts,
    generator_zero_locus_check,
    hilbert_consistency,
    hilbert_function,
    intersection_pattern,
    monomials,
    variety_containment,
    verify_complete_intersection,
)
from quartica.poly import MultiPoly

X, Y, Z = MultiPoly.gens(QQ)


def _pts(*cs):
    return [ProjPoint(list(c), QQ) for c in cs]


def test_monomials():
    for t in range(6):
        assert len(monomials(t)) == comb(t + 2, 2)


def test_hilbert_function_of_small_sets():
    three = PointSet(_pts((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert [hilbert_function(three, t) for t in range(4)] == [1, 3, 3, 3]
    collinear = PointSet(_pts((1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1)))
    assert [hilbert_function(collinear, t) for t in range(5)] == [1, 2, 3, 4, 4]


def test_betti_spec_values_and_check():
    spec = BettiSpec.from_pairs([(0, 1), (8, -3), (12, 2)], 48)
    spec.check()
    assert spec.generator_degrees() == {8: 3}
    assert spec.value(7) == comb(9, 2) and spec.value(20) == 48
    with pytest.raises(SpecInconsistent):
        BettiSpec.from_pairs([(0, 1), (8, -3), (12, 1)], 48).check()
    with pytest.raises(SpecInconsistent):
        BettiSpec.from_pairs([(0, 1), (8, -3), (12, 2)], 47).check()


def test_pk_dual_hilbert_and_negative_control():
    T = tower(KK)
    pts = line_census(get("kk.mtp_dual", T)).pn(2)
    spec = BettiSpec.from_pairs([(0, 1), (6, -1), (7, -3), (9, 3)], 30)
    rep = hilbert_consistency(PointSet(pts), spec)
    assert rep.consistent and rep.generators_match
    assert generator_counts(PointSet(pts), 8) == {6: 1, 7: 3}
    # moving one point off the configuration breaks the predicted values
    moved = pts[1:] + [ProjPoint([1, 2, 3], T)]
    assert not hilbert_consistency(PointSet(moved), spec).consistent


def test_fermat_mtp_complete_intersection():
    T = tower(FERMAT)
    x, y, z = MultiPoly.gens(T)
    F = get("fermat.quartic", T).form
    pf = get("fermat.mtp", T)
    assert verify_complete_intersection(PointSet(pf), x * y * z, F).certified
    with pytest.raises(CertificateFailure) as err:
        verify_complete_intersection(PointSet(pf[1:]), x * y * z, F)
    assert err.value.clause == "count"
    cert = verify_complete_intersection(PointSet(pf[1:]), x * y * z, F, strict=False)
    assert cert.failing_clause() == "count"


def test_ci_transversality_clause():
    # the circle and its tangent line y = z meet doubly at (0 : 1 : 1)
    cert = verify_complete_intersection(PointSet(_pts((0, 1, 1), (5, 0, 1))), X**2 + Y**2 - Z**2, Y - Z, strict=False)
    assert not cert.vanish
    single = verify_complete_intersection(PointSet(_pts((0, 1, 1))), X**2 + Y**2 - Z**2, Y - Z, strict=False)
    assert single.vanish and not single.count and not single.transversal


def test_forms_coprime():
    assert forms_coprime(X**2 + Y**2 - Z**2, X * Y)
    assert not forms_coprime((X - Y) * (X + Z), (X - Y) * Y)


def test_lf_generators_cut_out_the_double_points():
    T = tower(FERMAT)
    lines = get("fermat.mtl", T)
    gens = get("fermat.lf_ideal_generators", T)
    sets = [lines[0:4] + lines[8:12], lines[0:4] + lines[4:8], lines[8:12] + lines[4:8]]
    pts = line_census(lines).pn(2)
    assert generator_zero_locus_check(pts, gens, sets).equal
    fewer = generator_zero_locus_check(pts, gens[:2], sets[:2])
    assert not fewer.equal and len(fewer.common_lines) == 4


def test_intersection_pattern_and_containment():
    T = tower(KK)
    K, sextic, h2 = get("kk.quartic", T).form, get("kk.sextic", T), get("kk.h2", T)
    assert intersection_pattern(K, sextic) == [1] * 24
    assert variety_containment(K, sextic, h2).certified
    x, y, z = MultiPoly.gens(T)
    assert not variety_containment(K, sextic, x * y * z + x**3).certified
