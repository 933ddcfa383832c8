from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import small_rationals

from quartica.errors import DegenerateInput, FieldTooSmall, ZeroPolynomial
from quartica.field import QQ, make_tower
from quartica.poly import (
    MultiPoly,
    UniPoly,
    gcd,
    hessian_determinant,
    resultant,
    squarefree_decomposition,
    tower_roots,
    vanishing_order,
)

GAUSS = make_tower("Q(i:-1)")
SX, SY, SZ = sympy.symbols("x y z")


def _poly_strategy(tower, max_deg: int = 2, zdeg: int = 2):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg), st.integers(0, zdeg))
    terms = st.dictionaries(exps, small_rationals.filter(bool), min_size=1, max_size=4)

    def build(d):
        d = dict(d)
        d[(0, 0, zdeg)] = d.get((0, 0, zdeg), Fraction(1)) or Fraction(1)  # positive z-degree
        return MultiPoly(tower, {e: tower.from_rational(c) for e, c in d.items()})

    return terms.map(build)


def _to_sympy(p: MultiPoly):
    return sum(sympy.Rational(str(c.rational())) * SX**e[0] * SY**e[1] * SZ**e[2] for e, c in p.sorted_terms())


@settings(max_examples=500, deadline=None, derandomize=True)
@given(_poly_strategy(QQ, zdeg=1), _poly_strategy(QQ, zdeg=1), _poly_strategy(QQ, zdeg=2))
def test_resultant_is_multiplicative(f, g, h):
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(_poly_strategy(QQ), _poly_strategy(QQ, zdeg=1))
def test_resultant_matches_sympy(f, g):
    ours = _to_sympy(resultant(f, g, "z"))
    theirs = sympy.resultant(_to_sympy(f), _to_sympy(g), SZ)
    assert sympy.expand(ours - theirs) == 0


def test_resultant_of_conics_counts_intersections():
    x, y, z = MultiPoly.gens(QQ)
    circle = x**2 + y**2 - z**2
    ellipse = x**2 + 4 * y**2 - 4 * z**2
    r = resultant(circle, ellipse, "z")
    assert r.is_homogeneous() and r.degree() == 4


def test_resultant_needs_the_variable():
    x, y, _ = MultiPoly.gens(QQ)
    with pytest.raises(DegenerateInput):
        resultant(x + y, x - y, "z")


roots_with_mults = st.lists(st.tuples(st.integers(-6, 6), st.integers(1, 4)), min_size=1, max_size=4, unique_by=lambda t: t[0])


@settings(max_examples=200, deadline=None, derandomize=True)
@given(roots_with_mults, st.integers(1, 5))
def test_squarefree_reassembly(rm, lead):
    p = UniPoly.from_roots(GAUSS, [r for r, m in rm for _ in range(m)]) * lead
    parts = squarefree_decomposition(p)
    prod = UniPoly(GAUSS, [1])
    for f, m in parts:
        prod = prod * f**m
        assert gcd(f, f.derivative()).degree == 0
    assert prod == p.monic()
    for (f, _), (g, _) in zip(parts, parts[1:]):
        assert gcd(f, g).degree == 0
    expected = {}
    for _, m in rm:
        expected[m] = expected.get(m, 0) + 1
    assert {m: f.degree for f, m in parts} == expected


@settings(max_examples=200, deadline=None, derandomize=True)
@given(roots_with_mults)
def test_vanishing_order(rm):
    p = UniPoly.from_roots(GAUSS, [r for r, m in rm for _ in range(m)])
    for r, m in rm:
        assert vanishing_order(p, r) == m
    assert vanishing_order(p, 7) == 0


def test_vanishing_order_of_zero():
    with pytest.raises(ZeroPolynomial):
        vanishing_order(UniPoly(GAUSS, []), 1)


def test_gcd_recovers_common_factor():
    f = UniPoly.from_roots(GAUSS, [1, GAUSS.parse("i")])
    g = UniPoly.from_roots(GAUSS, [2, 3])
    h = UniPoly.from_roots(GAUSS, [-2])
    assert gcd(f * g, f * h) == f.monic()


def test_tower_roots_and_field_too_small():
    roots = sorted(str(r) for r, _ in tower_roots(UniPoly(GAUSS, [1, 0, 1])))
    assert roots == sorted([str(GAUSS.parse("i")), str(GAUSS.parse("-i"))])
    with pytest.raises(FieldTooSmall):
        tower_roots(UniPoly(QQ, [-2, 0, 1]))


def test_parse_print_round_trip():
    T = make_tower("Q(i:-1,r2:2,q2:r2)")
    for text in ("x^4 + y^4 + z^4", "(1+i)*r2/2*x - y", "x^3*y^3*z^3*(x^4-y^4)", "q2*x*y - 3/7*z^2"):
        p = MultiPoly.parse(text, T)
        assert MultiPoly.parse(str(p), T) == p


def test_hessian_of_fermat_quartic():
    x, y, z = MultiPoly.gens(QQ)
    H = hessian_determinant(x**4 + y**4 + z**4)
    assert H == 1728 * x**2 * y**2 * z**2


def test_along_matches_evaluation():
    T = make_tower("Q(i:-1,s5:5)")
    f = MultiPoly.parse("x^4 + y^4 + z^4 + 3*(x^2*y^2 + y^2*z^2 + z^2*x^2)", T)
    base, direction = [T.one, T.gen("i"), T.zero], [T.zero, T.one, T.gen("s5")]
    u = f.along(base, direction)
    for t in (0, 1, -2, 5):
        pt = [b + t * d for b, d in zip(base, direction)]
        assert u(t) == f.evaluate(pt)


def test_homogeneity():
    x, y, z = MultiPoly.gens(QQ)
    assert (x**2 + y * z).is_homogeneous()
    assert not (x**2 + y).is_homogeneous()
