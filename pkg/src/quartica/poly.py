"""Sparse polynomials in x, y, z over a tower field, and dense univariate polynomials.

:class:`MultiPoly` stores a map from exponent triples to nonzero coefficients.
:class:`UniPoly` stores coefficients lowest degree first and provides the
univariate machinery (gcd, squarefree decomposition, vanishing orders, roots
inside the tower, resultants) that every contact computation rests on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import DegenerateInput, FieldTooSmall, NotASquare, NotHomogeneous, TowerMismatch, ZeroPolynomial
from .field import FieldElement, TowerField, to_rational
from . import linalg

VARS = ("x", "y", "z")
_SCALARS = (int, Fraction, type(mpq(0)))


def _var_index(var) -> int:
    if isinstance(var, int):
        if var not in (0, 1, 2):
            raise ValueError(f"variable index must be 0, 1 or 2, got {var}")
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


class MultiPoly:
    """Polynomial in x, y, z with coefficients in a :class:`TowerField`."""

    __slots__ = ("tower", "terms")

    def __init__(self, tower: TowerField, terms: dict | None = None):
        self.tower = tower
        self.terms: dict[tuple[int, int, int], FieldElement] = {
            e: c for e, c in (terms or {}).items() if c
        }

    # -- constructors ---------------------------------------------------------
    @classmethod
    def const(cls, tower: TowerField, c) -> MultiPoly:
        return cls(tower, {(0, 0, 0): tower.coerce(c)})

    @classmethod
    def var(cls, tower: TowerField, v) -> MultiPoly:
        e = [0, 0, 0]
        e[_var_index(v)] = 1
        return cls(tower, {tuple(e): tower.one})

    @classmethod
    def gens(cls, tower: TowerField) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        return tuple(cls.var(tower, v) for v in VARS)

    @classmethod
    def linear(cls, tower: TowerField, coeffs: Sequence) -> MultiPoly:
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0, 0, 0]
            e[k] = 1
            terms[tuple(e)] = tower.coerce(c)
        return cls(tower, terms)

    @classmethod
    def parse(cls, text: str, tower: TowerField, env: dict | None = None) -> MultiPoly:
        """Parse DSL expression syntax, e.g. ``"x^4 + y^4 + 3*(x^2*y^2)"``."""
        from .dsl.fieldexpr import evaluate_poly_expression

        value = evaluate_poly_expression(text, tower, env)
        if isinstance(value, FieldElement):
            return cls.const(tower, value)
        return value

    # -- structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var) -> int:
        k = _var_index(var)
        if not self.terms:
            return -1
        return max(e[k] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: tuple[int, int, int]) -> FieldElement:
        return self.terms.get(tuple(exps), self.tower.zero)

    def sorted_terms(self):
        """Terms in graded lexicographic order with x > y > z, largest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def lift(self, tower: TowerField) -> MultiPoly:
        if tower is self.tower:
            return self
        return MultiPoly(tower, {e: tower.lift(c) for e, c in self.terms.items()})

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.tower is not self.tower:
                raise TowerMismatch(f"cannot combine polynomials over {self.tower} and {other.tower}")
            return other
        if isinstance(other, FieldElement) or isinstance(other, _SCALARS):
            return MultiPoly.const(self.tower, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return MultiPoly(self.tower, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.tower, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, _SCALARS):
            c = self.tower.coerce(other) if isinstance(other, FieldElement) else other
            return MultiPoly(self.tower, {e: v * c for e, v in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                v = c1 * c2
                out[e] = out[e] + v if e in out else v
        return MultiPoly(self.tower, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, _SCALARS):
            inv = 1 / self.tower.coerce(other)
            return self * inv
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = MultiPoly.const(self.tower, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, MultiPoly) or other.tower is self.tower else None
        if o is None:
            return False
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- calculus and evaluation ----------------------------------------------
    def diff(self, var) -> MultiPoly:
        k = _var_index(var)
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = list(e)
                ne[k] -= 1
                out[tuple(ne)] = c * e[k]
        return MultiPoly(self.tower, out)

    def __call__(self, *pt) -> FieldElement:
        return self.evaluate(pt[0] if len(pt) == 1 else pt)

    def evaluate(self, pt: Sequence) -> FieldElement:
        vals = [self.tower.coerce(v) for v in pt]
        degs = [self.degree_in(k) for k in range(3)]
        powers = []
        for k in range(3):
            pw = [self.tower.one]
            for _ in range(max(degs[k], 0)):
                pw.append(pw[-1] * vals[k])
            powers.append(pw)
        total = self.tower.zero
        for e, c in self.terms.items():
            v = c
            for k in range(3):
                if e[k]:
                    v = v * powers[k][e[k]]
            total = total + v
        return total

    def substitute(self, forms: Sequence[MultiPoly]) -> MultiPoly:
        """Compose with ``(x, y, z) -> forms``."""
        degs = [self.degree_in(k) for k in range(3)]
        powers = []
        for k in range(3):
            pw = [MultiPoly.const(self.tower, 1)]
            for _ in range(max(degs[k], 0)):
                pw.append(pw[-1] * forms[k])
            powers.append(pw)
        out = MultiPoly(self.tower)
        cache: dict = {}
        for e, c in self.terms.items():
            key = (e[0], e[1])
            if key not in cache:
                cache[key] = powers[0][e[0]] * powers[1][e[1]]
            out = out + cache[key] * powers[2][e[2]] * c
        return out

    def linear_change(self, matrix: Sequence[Sequence]) -> MultiPoly:
        """Substitute ``v -> matrix @ v`` (rows give the new x, y, z)."""
        forms = [MultiPoly.linear(self.tower, row) for row in matrix]
        return self.substitute(forms)

    def along(self, base: Sequence[FieldElement], direction: Sequence[FieldElement]) -> UniPoly:
        """Univariate restriction t -> self(base + t * direction)."""
        tower = self.tower
        lines = [UniPoly(tower, [tower.coerce(base[k]), tower.coerce(direction[k])]) for k in range(3)]
        degs = [self.degree_in(k) for k in range(3)]
        powers = []
        for k in range(3):
            pw = [UniPoly(tower, [tower.one])]
            for _ in range(max(degs[k], 0)):
                pw.append(pw[-1] * lines[k])
            powers.append(pw)
        out = UniPoly(tower, [])
        for e, c in self.terms.items():
            out = out + powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * c
        return out

    def coefficients_in(self, var) -> list[MultiPoly]:
        """``[c_0, c_1, ...]`` with self = sum c_k * var^k."""
        k = _var_index(var)
        d = self.degree_in(k)
        out = [dict() for _ in range(max(d + 1, 0))]
        for e, c in self.terms.items():
            ne = list(e)
            ne[k] = 0
            out[e[k]][tuple(ne)] = c
        return [MultiPoly(self.tower, t) for t in out]

    def to_unipoly(self, var) -> UniPoly:
        k = _var_index(var)
        for e in self.terms:
            if any(e[j] for j in range(3) if j != k):
                raise ValueError("polynomial involves other variables")
        d = self.degree_in(k)
        coeffs = [self.tower.zero] * (d + 1)
        for e, c in self.terms.items():
            coeffs[e[k]] = c
        return UniPoly(self.tower, coeffs)

    # -- printing -------------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (VARS[k] if e[k] == 1 else f"{VARS[k]}^{e[k]}") for k in range(3) if e[k]
            )
            if c.is_rational():
                q = c.rational()
                sign = "-" if q < 0 else "+"
                mag = abs(q)
                coef = "" if (mag == 1 and mono) else _fmt_q(mag)
            else:
                sign = "+"
                coef = f"({c})"
            body = coef + ("*" if coef and mono else "") + mono
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _fmt_q(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def hessian_determinant(p: MultiPoly) -> MultiPoly:
    second = [[p.diff(a).diff(b) for b in range(3)] for a in range(3)]
    m = second
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


# ---------------------------------------------------------------------------
class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: TowerField, coeffs: Iterable):
        cs = [tower.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.tower = tower
        self.coeffs: list[FieldElement] = cs

    @classmethod
    def from_roots(cls, tower: TowerField, roots: Iterable) -> UniPoly:
        out = cls(tower, [1])
        for r in roots:
            out = out * cls(tower, [-tower.coerce(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.tower.zero

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        inv = self.lc().inverse()
        return UniPoly(self.tower, [c * inv for c in self.coeffs])

    def __getitem__(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.tower.zero

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> UniPoly | None:
        if isinstance(other, UniPoly):
            if other.tower is not self.tower:
                raise TowerMismatch("univariate polynomials over different towers")
            return other
        if isinstance(other, FieldElement) or isinstance(other, _SCALARS):
            return UniPoly(self.tower, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.tower, [self[k] + o[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.tower, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, _SCALARS):
            return UniPoly(self.tower, [c * other for c in self.coeffs])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly(self.tower, [])
        out = [self.tower.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(self.tower, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly(self.tower, [1])
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, UniPoly) or other.tower is self.tower else None
        return o is not None and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not other.coeffs:
            raise ZeroPolynomial("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        inv = other.lc().inverse()
        q = [self.tower.zero] * max(len(r) - d, 0)
        for k in range(len(r) - 1 - d, -1, -1):
            c = r[k + d] * inv
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    if b:
                        r[k + j] = r[k + j] - c * b
        return UniPoly(self.tower, q), UniPoly(self.tower, r[:d])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> UniPoly:
        return UniPoly(self.tower, [c * k for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, t) -> FieldElement:
        t = self.tower.coerce(t)
        acc = self.tower.zero
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def shift(self, r) -> UniPoly:
        """p(t + r), by repeated synthetic division (Taylor coefficients)."""
        r = self.tower.coerce(r)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] = cs[j] + r * cs[j + 1]
        return UniPoly(self.tower, cs)

    def lift(self, tower: TowerField) -> UniPoly:
        return UniPoly(tower, [tower.lift(c) for c in self.coeffs])

    def embed(self) -> list[complex]:
        return [c.embed() for c in self.coeffs]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            coef = str(c) if c.is_rational() else f"({c})"
            if mono and coef == "1":
                parts.append(mono)
            elif mono and coef == "-1":
                parts.append("-" + mono)
            else:
                parts.append(coef + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor (monic remainder sequence)."""
    a, b = p, q
    while b:
        a, b = b, a % b
        if b:
            b = b.monic()
    return a.monic() if a else a


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: pairwise coprime squarefree monic factors with multiplicities.

    ``prod f**m`` equals ``p`` up to the leading coefficient.  Factors are
    listed by increasing multiplicity.
    """
    if not p:
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    out: list[tuple[UniPoly, int]] = []
    if p.degree == 0:
        return out
    dp = p.derivative()
    a = gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def vanishing_order(p: UniPoly, r) -> int:
    """Largest k with (t - r)^k dividing p."""
    if not p:
        raise ZeroPolynomial("vanishing order of the zero polynomial is undefined")
    r = p.tower.coerce(r)
    k = 0
    cur = p.coeffs
    while True:
        # synthetic division by (t - r)
        n = len(cur)
        if n == 1:
            return k
        q = [None] * (n - 1)
        acc = cur[-1]
        q[-1] = acc
        for j in range(n - 2, 0, -1):
            acc = cur[j] + acc * r
            q[j - 1] = acc
        rem = cur[0] + acc * r
        if rem:
            return k
        k += 1
        cur = q


def univariate_resultant(f: UniPoly, g: UniPoly) -> FieldElement:
    """Res(f, g) for the actual degrees, by the Euclidean algorithm."""
    tower = f.tower
    if not f or not g:
        return tower.zero
    m, n = f.degree, g.degree
    if m == 0:
        return f.lc() ** n
    if n == 0:
        return g.lc() ** m
    res = tower.one
    a, b = f, g
    while True:
        m, n = a.degree, b.degree
        if n == 0:
            return res * b.lc() ** m
        r = a % b
        if not r:
            return tower.zero
        k = r.degree
        # Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        sign = -1 if (m * n) % 2 else 1
        res = res * (b.lc() ** (m - k)) * sign
        a, b = b, r


def formal_resultant(f: UniPoly, g: UniPoly, m: int, n: int) -> FieldElement:
    """Resultant of the Sylvester matrix with formal degrees m >= deg f, n >= deg g."""
    tower = f.tower
    df, dg = f.degree, g.degree
    if df < m and dg < n:
        return tower.zero
    if df < 0 or dg < 0:
        return tower.zero
    if df < m:
        # Res_{m,n}(f,g) = (-1)^{(m-df) n} lc(g)^{m-df} Res_{df,n}(f,g)
        sign = -1 if ((m - df) * n) % 2 else 1
        return univariate_resultant(f, g) * (g.lc() ** (m - df)) * sign
    if dg < n:
        # Res_{m,n}(f,g) = lc(f)^{n-dg} Res_{m,dg}(f,g)
        return univariate_resultant(f, g) * (f.lc() ** (n - dg))
    return univariate_resultant(f, g)


def sylvester_matrix(f: UniPoly, g: UniPoly, m: int | None = None, n: int | None = None):
    tower = f.tower
    m = f.degree if m is None else m
    n = g.degree if n is None else n
    size = m + n
    rows = []
    fc = [f[k] for k in range(m, -1, -1)]
    gc = [g[k] for k in range(n, -1, -1)]
    for i in range(n):
        rows.append([tower.zero] * i + fc + [tower.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([tower.zero] * i + gc + [tower.zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(f: UniPoly, g: UniPoly, m: int | None = None, n: int | None = None) -> FieldElement:
    """Determinant of the Sylvester matrix; an independent check on :func:`formal_resultant`."""
    rows = sylvester_matrix(f, g, m, n)
    if not rows:
        return f.tower.one
    return linalg.determinant(rows, f.tower)


def _interpolate(tower: TowerField, xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton interpolation through (xs[k], ys[k])."""
    n = len(xs)
    xs = [tower.coerce(x) for x in xs]
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = UniPoly(tower, [coef[-1]])
    for k in range(n - 2, -1, -1):
        out = out * UniPoly(tower, [-xs[k], 1]) + coef[k]
    return out


def resultant(p: MultiPoly, q: MultiPoly, var="z") -> MultiPoly:
    """Sylvester resultant eliminating ``var``, as a polynomial in the other two variables.

    Computed by evaluation at rational sample points and interpolation; the
    result equals the Sylvester determinant with the degrees of p and q in
    ``var`` as formal degrees.
    """
    k = _var_index(var)
    if p.tower is not q.tower:
        raise TowerMismatch("resultant of polynomials over different towers")
    tower = p.tower
    m, n = p.degree_in(k), q.degree_in(k)
    if m <= 0 or n <= 0:
        raise DegenerateInput(f"both inputs need positive degree in {VARS[k]}")
    others = [j for j in range(3) if j != k]
    pc, qc = p.coefficients_in(k), q.coefficients_in(k)

    def res_at(point: dict) -> FieldElement:
        def spec(coeffs):
            vals = []
            for c in coeffs:
                pt = [tower.zero] * 3
                for j, v in point.items():
                    pt[j] = tower.coerce(v)
                vals.append(c.evaluate(pt))
            return UniPoly(tower, vals)

        return formal_resultant(spec(pc), spec(qc), m, n)

    if p.is_homogeneous() and q.is_homogeneous():
        dp, dq = p.degree(), q.degree()
        total = dp * dq - (dp - m) * (dq - n)
        a, b = others
        xs = list(range(total + 1))
        ys = [res_at({a: t, b: 1}) for t in xs]
        uni = _interpolate(tower, xs, ys)
        terms = {}
        for d, c in enumerate(uni.coeffs):
            if c:
                e = [0, 0, 0]
                e[a] = d
                e[b] = total - d
                terms[tuple(e)] = c
        return MultiPoly(tower, terms)

    a, b = others
    bound = []
    for j in (a, b):
        bound.append(n * max(p.degree_in(j), 0) + m * max(q.degree_in(j), 0))
    xa = list(range(bound[0] + 1))
    xb = list(range(bound[1] + 1))
    # interpolate in a for each fixed b, then in b coefficient-wise
    rows = []
    for vb in xb:
        ys = [res_at({a: va, b: vb}) for va in xa]
        rows.append(_interpolate(tower, xa, ys))
    terms = {}
    for da in range(bound[0] + 1):
        ys = [row[da] for row in rows]
        col = _interpolate(tower, xb, ys)
        for db, c in enumerate(col.coeffs):
            if c:
                e = [0, 0, 0]
                e[a] = da
                e[b] = db
                terms[tuple(e)] = c
    return MultiPoly(tower, terms)


def binary_form_to_unipoly(form: MultiPoly, var, other) -> tuple[UniPoly, int]:
    """Dehomogenize a binary form at ``other = 1``; returns (poly in var, order at infinity)."""
    k, o = _var_index(var), _var_index(other)
    deg = form.degree()
    coeffs = [form.tower.zero] * (deg + 1)
    for e, c in form.terms.items():
        coeffs[e[k]] = c
    u = UniPoly(form.tower, coeffs)
    return u, deg - u.degree


# ---------------------------------------------------------------------------
def roots_structured(p: UniPoly) -> list[tuple[FieldElement, int]]:
    """All roots of p (degree <= 4) that lie in its tower, with multiplicities.

    Raises :class:`FieldTooSmall` when some irreducible factor of degree >= 2
    has no root in the tower.
    """
    if p and p.degree > 4:
        raise ValueError("roots_structured handles degree <= 4 only")
    return tower_roots(p)


def tower_roots(p: UniPoly) -> list[tuple[FieldElement, int]]:
    """Like :func:`roots_structured` without the degree limit."""
    if not p:
        raise ZeroPolynomial("roots of the zero polynomial")
    out: list[tuple[FieldElement, int]] = []
    pattern = squarefree_decomposition(p)
    for factor, mult in pattern:
        try:
            roots = _squarefree_roots(factor)
        except FieldTooSmall as exc:
            raise FieldTooSmall(str(exc), pattern=pattern) from None
        for r in roots:
            out.append((r, mult))
    return out


def _squarefree_roots(f: UniPoly) -> list[FieldElement]:
    tower = f.tower
    f = f.monic()
    d = f.degree
    if d <= 0:
        return []
    if d == 1:
        return [-f[0]]
    if d == 2:
        b, c = f[1], f[0]
        disc = b * b - 4 * c
        try:
            s = disc.sqrt()
        except NotASquare:
            raise FieldTooSmall(f"{f} has no roots in {tower}", pattern=[(f, 1)]) from None
        return [(-b + s) / 2, (-b - s) / 2]
    # biquadratic shortcut, otherwise split into irreducible factors
    if d == 4 and not f[1] and not f[3]:
        try:
            roots = []
            for w in _squarefree_roots(UniPoly(tower, [f[0], f[2], 1])):
                s = w.sqrt()
                roots.extend([s, -s])
            return roots
        except (NotASquare, FieldTooSmall):
            pass
    factors = _factor_over_tower(f)
    roots = []
    for g in factors:
        if g.degree == 1:
            roots.append(-g.monic()[0])
        elif g.degree == 2:
            roots.extend(_squarefree_roots(g))
        else:
            raise FieldTooSmall(f"{g} is irreducible over {tower}", pattern=[(g, 1)])
    return roots


def _factor_over_tower(f: UniPoly) -> list[UniPoly]:
    """Monic irreducible factors of a squarefree polynomial over the tower."""
    from .symbolic import factor_over_tower

    return factor_over_tower(f)
