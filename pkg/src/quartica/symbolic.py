"""Bridge to sympy for factoring small univariate polynomials over a tower.

Only used by :func:`quartica.poly.roots_structured` for squarefree cubics and
quartics that are not biquadratic.  Results are converted back into exact
tower elements and checked by multiplication before being returned.
"""

from __future__ import annotations

from functools import lru_cache

import sympy
from gmpy2 import mpq

from .field import FieldElement, TowerField


@lru_cache(maxsize=None)
def _generator_exprs(tower: TowerField) -> tuple:
    exprs: list = []
    for k in range(tower.levels):
        rad = tower.radicands[k]
        basis = _basis_exprs(exprs)
        value = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * basis[i] for i, c in enumerate(rad) if c)
        exprs.append(sympy.sqrt(value))
    return tuple(exprs)


def _basis_exprs(gens) -> list:
    out = [sympy.Integer(1)]
    for g in gens:
        out = out + [b * g for b in out]
    return out


def to_sympy(a: FieldElement):
    basis = _basis_exprs(list(_generator_exprs(a.tower)))
    return sum(
        (sympy.Rational(int(c.numerator), int(c.denominator)) * basis[i] for i, c in enumerate(a.coords) if c),
        sympy.Integer(0),
    )


def from_sympy(expr, tower: TowerField) -> FieldElement:
    """Convert a sympy expression built from the generators and rationals."""
    gens = _generator_exprs(tower)
    lookup = {sympy.simplify(g): tower.gen(name) for g, name in zip(gens, tower.names)}

    def walk(e):
        e = sympy.sympify(e)
        if e.is_Rational:
            return tower.from_rational(mpq(int(e.p), int(e.q)))
        for g, v in lookup.items():
            if e == g:
                return v
        if e.is_Add:
            out = tower.zero
            for a in e.args:
                out = out + walk(a)
            return out
        if e.is_Mul:
            out = tower.one
            for a in e.args:
                out = out * walk(a)
            return out
        if e.is_Pow and e.exp.is_Integer:
            return walk(e.base) ** int(e.exp)
        if e.is_Pow and e.exp.is_Rational:
            # e.g. 2**(3/4) = (2**(1/4))**3
            base_root = sympy.Pow(e.base, sympy.Rational(1, int(e.exp.q)))
            return walk(base_root) ** int(e.exp.p)
        raise ValueError(f"cannot express {e} in {tower}")

    return walk(expr)


def factor_over_tower(f):
    """Monic irreducible factors of ``f`` over its tower (via sympy's algebraic factoring)."""
    from .poly import UniPoly

    tower = f.tower
    t = sympy.Symbol("t")
    expr = sum(to_sympy(c) * t**k for k, c in enumerate(f.coeffs))
    gens = list(_generator_exprs(tower))
    domain = sympy.QQ.algebraic_field(*gens) if gens else sympy.QQ
    poly = sympy.Poly(expr, t, domain=domain)
    _, factors = poly.factor_list()
    if gens:
        theta = from_sympy(domain.ext.as_expr(), tower)
    out = []
    for fac, mult in factors:
        coeffs = []
        for c in reversed(fac.rep.to_list()):
            if gens:
                val = tower.zero
                for q in c.to_list():
                    val = val * theta + tower.from_rational(mpq(int(q.numerator), int(q.denominator)))
                coeffs.append(val)
            else:
                coeffs.append(tower.from_rational(mpq(int(c.numerator), int(c.denominator))))
        g = UniPoly(tower, coeffs).monic()
        out.extend([g] * mult)
    check = UniPoly(tower, [1])
    for g in out:
        check = check * g
    if check != f.monic():
        raise ArithmeticError("factorization failed exact verification")
    return out
