"""Exact arithmetic in towers of quadratic extensions of the rationals.

A tower ``Q(g0: r0, g1: r1, ...)`` adjoins ``g_k = sqrt(r_k)`` where each
radicand ``r_k`` lives in the tower built from the earlier levels.  Elements
are dense coordinate vectors over the monomial basis ``prod_{k in S} g_k``;
basis index ``sum_{k in S} 2**k``, so the top generator splits the vector into
a lower half (the subtower part) and an upper half (its coefficient).
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpq

from .errors import (
    DegenerateExtension,
    DivisionByZero,
    MalformedSpec,
    NotASquare,
    TowerMismatch,
)

ZERO = mpq(0)
ONE = mpq(1)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_RESERVED = {"x", "y", "z", "Q"}


def to_rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact rational."""
    if isinstance(value, type(ZERO)):
        return value
    if isinstance(value, (int, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        return mpq(Fraction(value.strip()))
    if type(value).__name__ == "mpz":
        return mpq(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rational_sqrt(q: mpq) -> mpq | None:
    """Exact square root of a rational, or None when it is not a square."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    if not (gmpy2.is_square(num) and gmpy2.is_square(den)):
        return None
    return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))


class TowerField:
    """A tower of quadratic extensions of Q.

    Build instances with :func:`make_tower`; towers are cached by their spec,
    so two equal specs give the same object.
    """

    def __init__(self, levels: Sequence[tuple[str, tuple]], parent: TowerField | None = None):
        # levels: (name, radicand coordinates over the preceding subtower)
        self.names: tuple[str, ...] = tuple(name for name, _ in levels)
        self.radicands: tuple[tuple[mpq, ...], ...] = tuple(r for _, r in levels)
        self.levels = len(levels)
        self.degree = 1 << self.levels
        self._table = self._build_table(parent)
        self.embedding: tuple[complex, ...] = self._choose_embedding()
        self._basis_values = self._basis_embeddings()
        self.zero = FieldElement(self, (ZERO,) * self.degree)
        self.one = self.from_rational(1)

    # -- construction helpers -------------------------------------------------
    def _build_table(self, parent):
        if self.levels == 0:
            return [[((0, ONE),)]]
        if parent is None or parent.levels != self.levels - 1:
            parent = TowerField(list(zip(self.names[:-1], self.radicands[:-1])))
        h = parent.degree
        r = self.radicands[-1]
        sub = parent._table
        table = [[None] * (2 * h) for _ in range(2 * h)]
        for i in range(2 * h):
            i0, ti = i % h, i >= h
            for j in range(2 * h):
                j0, tj = j % h, j >= h
                base = sub[i0][j0]
                if ti and tj:
                    vec = [ZERO] * h
                    for k, c in base:
                        vec[k] = c
                    prod = parent._mul(tuple(vec), r)
                    table[i][j] = tuple((k, c) for k, c in enumerate(prod) if c)
                elif ti or tj:
                    table[i][j] = tuple((k + h, c) for k, c in base)
                else:
                    table[i][j] = base
        return table

    def _choose_embedding(self):
        values: list[complex] = []
        for k in range(self.levels):
            r = self.radicands[k]
            basis = _basis_values_for(values)
            rv = sum(complex(float(c), 0.0) * basis[i] for i, c in enumerate(r) if c)
            values.append(_principal_sqrt(rv))
        return tuple(values)

    def _basis_embeddings(self):
        return _basis_values_for(list(self.embedding))

    # -- element constructors -------------------------------------------------
    def from_rational(self, q) -> FieldElement:
        coords = [ZERO] * self.degree
        coords[0] = to_rational(q)
        return FieldElement(self, tuple(coords))

    def element(self, coords: Iterable) -> FieldElement:
        coords = tuple(to_rational(c) for c in coords)
        if len(coords) != self.degree:
            raise MalformedSpec(f"expected {self.degree} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def gen(self, name: str) -> FieldElement:
        try:
            k = self.names.index(name)
        except ValueError:
            raise MalformedSpec(f"tower {self} has no generator {name!r}") from None
        coords = [ZERO] * self.degree
        coords[1 << k] = ONE
        return FieldElement(self, tuple(coords))

    def coerce(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.tower is not self:
                raise TowerMismatch(f"element of {value.tower} used in {self}")
            return value
        return self.from_rational(value)

    def parse(self, text: str) -> FieldElement:
        """Evaluate an arithmetic expression in the generators, e.g. ``"(1+i)*r2/2"``."""
        from .dsl.fieldexpr import evaluate_field_expression

        return evaluate_field_expression(text, self)

    def is_subtower_of(self, other: TowerField) -> bool:
        try:
            self._embedding_map(other)
        except TowerMismatch:
            return False
        return True

    def _embedding_map(self, other: TowerField) -> list[int]:
        """Basis index map from ``self`` into ``other`` (generators matched by name)."""
        pos = []
        for k, name in enumerate(self.names):
            if name not in other.names:
                raise TowerMismatch(f"{other} lacks generator {name!r}")
            pos.append(other.names.index(name))
        basis_map = []
        for b in range(self.degree):
            t = 0
            for k in range(self.levels):
                if b >> k & 1:
                    t |= 1 << pos[k]
            basis_map.append(t)
        for k, name in enumerate(self.names):
            sub = self.radicands[k]
            mapped = [ZERO] * other.degree
            for i, c in enumerate(sub):
                if c:
                    mapped[basis_map[i]] = c
            j = pos[k]
            target = list(other.radicands[j]) + [ZERO] * (other.degree - len(other.radicands[j]))
            if mapped != target:
                raise TowerMismatch(f"generator {name!r} has a different radicand in {other}")
        return basis_map

    def lift(self, value) -> FieldElement:
        """Re-express an element of a compatible smaller tower inside this one."""
        if not isinstance(value, FieldElement):
            return self.from_rational(value)
        if value.tower is self:
            return value
        basis_map = value.tower._embedding_map(self)
        coords = [ZERO] * self.degree
        for i, c in enumerate(value.coords):
            if c:
                coords[basis_map[i]] = c
        return FieldElement(self, tuple(coords))

    # -- coordinate-level arithmetic -----------------------------------------
    def _mul(self, u: tuple, v: tuple) -> tuple:
        n = len(u)
        out = [ZERO] * n
        table = self._table
        nz_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in enumerate(u):
            if not a:
                continue
            row = table[i]
            for j, b in nz_v:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def _inv(self, u: tuple, level: int) -> tuple:
        if level == 0:
            if not u[0]:
                raise DivisionByZero("division by zero")
            return (1 / u[0],)
        h = len(u) // 2
        a, b = u[:h], u[h:]
        if not any(b):
            return self._inv(a, level - 1) + (ZERO,) * h
        r = self.radicands[level - 1]
        norm = tuple(
            p - q for p, q in zip(self._mul(a, a), self._mul(r, self._mul(b, b)))
        )
        ninv = self._inv(norm, level - 1)
        return self._mul(a, ninv) + tuple(-c for c in self._mul(b, ninv))

    def _sqrt(self, u: tuple, level: int) -> tuple | None:
        if level == 0:
            s = rational_sqrt(u[0])
            return None if s is None else (s,)
        h = len(u) // 2
        a, b = u[:h], u[h:]
        zeros = (ZERO,) * h
        if not any(b):
            s = self._sqrt(a, level - 1)
            if s is not None:
                return s + zeros
            r = self.radicands[level - 1]
            t = self._sqrt(self._mul(a, self._inv(r, level - 1)), level - 1)
            if t is not None:
                return zeros + t
            return None
        r = self.radicands[level - 1]
        disc = tuple(p - q for p, q in zip(self._mul(a, a), self._mul(r, self._mul(b, b))))
        n = self._sqrt(disc, level - 1)
        if n is None:
            return None
        half = mpq(1, 2)
        for cand in (
            tuple((p + q) * half for p, q in zip(a, n)),
            tuple((p - q) * half for p, q in zip(a, n)),
        ):
            s = self._sqrt(cand, level - 1)
            if s is not None and any(s):
                two_s_inv = self._inv(tuple(2 * c for c in s), level - 1)
                return s + self._mul(b, two_s_inv)
        return None

    def _embed(self, u: tuple) -> complex:
        bv = self._basis_values
        return sum((float(c) * bv[i] for i, c in enumerate(u) if c), 0j)

    # -- identity -------------------------------------------------------------
    @property
    def spec(self) -> str:
        parts = []
        for k, name in enumerate(self.names):
            sub = _SubtowerView(self, k)
            parts.append(f"{name}:{sub.format(self.radicands[k])}")
        return "Q(" + ",".join(parts) + ")"

    def __repr__(self) -> str:
        return f"TowerField({self.spec!r})"

    def __str__(self) -> str:
        return self.spec

    def __reduce__(self):
        return (make_tower, (self.spec,))


class _SubtowerView:
    def __init__(self, tower: TowerField, level: int):
        self.tower = tower
        self.level = level

    def format(self, coords) -> str:
        return _format_coords(coords, self.tower.names[: self.level])


def _basis_values_for(gen_values: list[complex]) -> list[complex]:
    out = [1 + 0j]
    for g in gen_values:
        out = out + [v * g for v in out]
    return out


def _principal_sqrt(z: complex) -> complex:
    s = cmath.sqrt(complex(z.real, abs(z.imag) if z.imag == 0 else z.imag))
    return s


def _basis_name(index: int, names: Sequence[str]) -> str:
    return "*".join(names[k] for k in range(len(names)) if index >> k & 1)


def _format_coords(coords, names: Sequence[str]) -> str:
    terms = []
    for i, c in enumerate(coords):
        if not c:
            continue
        mono = _basis_name(i, names)
        if not mono:
            terms.append(_format_rational(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{_format_rational(c)}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _format_rational(c: mpq) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class FieldElement:
    """An immutable element of a :class:`TowerField`."""

    __slots__ = ("tower", "coords", "_hash")

    def __init__(self, tower: TowerField, coords: tuple):
        self.tower = tower
        self.coords = coords
        self._hash = None

    # -- coercion -------------------------------------------------------------
    def _other(self, other) -> tuple | None:
        if isinstance(other, FieldElement):
            if other.tower is not self.tower:
                raise TowerMismatch(f"cannot combine elements of {self.tower} and {other.tower}")
            return other.coords
        if isinstance(other, (int, Fraction)) or type(other) is type(ZERO):
            coords = [ZERO] * self.tower.degree
            coords[0] = to_rational(other)
            return tuple(coords)
        return None

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.tower, tuple(a + b for a, b in zip(self.coords, v)))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.tower, tuple(a - b for a, b in zip(self.coords, v)))

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.tower, tuple(b - a for a, b in zip(self.coords, v)))

    def __neg__(self):
        return FieldElement(self.tower, tuple(-a for a in self.coords))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.tower is not self.tower:
                raise TowerMismatch(f"cannot combine elements of {self.tower} and {other.tower}")
            return FieldElement(self.tower, self.tower._mul(self.coords, other.coords))
        if isinstance(other, (int, Fraction)) or type(other) is type(ZERO):
            q = to_rational(other)
            return FieldElement(self.tower, tuple(a * q for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement(self.tower, self.tower._inv(self.coords, self.tower.levels))

    def __truediv__(self, other):
        if isinstance(other, FieldElement):
            if other.tower is not self.tower:
                raise TowerMismatch(f"cannot combine elements of {self.tower} and {other.tower}")
            if other.is_rational():
                q = other.coords[0]
                if not q:
                    raise DivisionByZero("division by zero")
                return FieldElement(self.tower, tuple(a / q for a in self.coords))
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) or type(other) is type(ZERO):
            q = to_rational(other)
            if not q:
                raise DivisionByZero("division by zero")
            return FieldElement(self.tower, tuple(a / q for a in self.coords))
        return NotImplemented

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.tower, v) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.tower.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> mpq:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.tower is other.tower and self.coords == other.coords
        v = self._other(other) if isinstance(other, (int, Fraction)) or type(other) is type(ZERO) else None
        return v is not None and self.coords == v

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coords[0])
            else:
                self._hash = hash((self.tower.spec, self.coords))
        return self._hash

    # -- square roots and embedding -------------------------------------------
    def sqrt(self) -> FieldElement:
        """Square root inside the tower; raises :class:`NotASquare`.

        Of the two roots, returns the one whose embedding has non-negative
        real part (ties: non-negative imaginary part).
        """
        root = self.tower._sqrt(self.coords, self.tower.levels)
        if root is None:
            raise NotASquare(f"{self} is not a square in {self.tower}")
        b = FieldElement(self.tower, root)
        if b * b != self:
            raise AssertionError("square root failed exact verification")
        z = b.embed()
        scale = max(1.0, abs(z))
        if z.real < -1e-12 * scale or (abs(z.real) <= 1e-12 * scale and z.imag < 0):
            b = -b
        return b

    def embed(self) -> complex:
        return self.tower._embed(self.coords)

    def conjugate(self, name: str) -> FieldElement:
        """Apply the automorphism flipping the sign of one generator.

        Only valid when no later radicand depends on that generator.
        """
        k = self.tower.names.index(name)
        for j in range(k + 1, self.tower.levels):
            if any(c for i, c in enumerate(self.tower.radicands[j]) if i >> k & 1):
                raise ValueError(f"generator {name!r} is not independent of later levels")
        coords = tuple(-c if i >> k & 1 else c for i, c in enumerate(self.coords))
        return FieldElement(self.tower, coords)

    # -- printing -------------------------------------------------------------
    def __str__(self) -> str:
        return _format_coords(self.coords, self.tower.names)

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.tower.spec})"

    def __reduce__(self):
        return (_rebuild_element, (self.tower.spec, tuple(str(c) for c in self.coords)))


def _rebuild_element(spec: str, coords):
    return make_tower(spec).element(coords)


def _parse_spec(text: str) -> list[tuple[str, str]]:
    text = text.strip().replace(" ", "")
    if not (text.startswith("Q(") and text.endswith(")")):
        raise MalformedSpec(f"tower spec must look like Q(name:radicand,...): {text!r}")
    body = text[2:-1]
    if not body:
        return []
    out = []
    for part in body.split(","):
        if ":" not in part:
            raise MalformedSpec(f"bad tower level {part!r}")
        name, expr = part.split(":", 1)
        out.append((name, expr))
    return out


def make_tower(spec) -> TowerField:
    """Build a tower from ``"Q(i:-1,r2:2,q2:r2)"`` or a list of (name, radicand) pairs.

    Radicands may be rationals, expression strings in the earlier generators,
    or elements of the tower built so far.  A radicand that is already a
    square raises :class:`DegenerateExtension`.
    """
    if isinstance(spec, str):
        pairs = _parse_spec(spec)
    else:
        pairs = list(spec)
    return _make_tower_cached(tuple((n, _freeze_radicand(r)) for n, r in pairs))


def _freeze_radicand(r):
    if isinstance(r, FieldElement):
        return ("coords", r.tower.spec, tuple(str(c) for c in r.coords))
    if isinstance(r, str):
        return ("expr", r)
    return ("expr", str(to_rational(r)))


_INTERN: dict[str, TowerField] = {}


def _intern(levels, parent) -> TowerField:
    tower = TowerField(levels, parent)
    return _INTERN.setdefault(tower.spec, tower)


@lru_cache(maxsize=None)
def _make_tower_cached(frozen) -> TowerField:
    levels: list[tuple[str, tuple]] = []
    current = _intern([], None)
    for name, rad in frozen:
        if not isinstance(name, str) or not _IDENT.match(name) or name in _RESERVED:
            raise MalformedSpec(f"invalid generator name {name!r}")
        if name in current.names:
            raise MalformedSpec(f"duplicate generator name {name!r}")
        kind = rad[0]
        try:
            if kind == "coords":
                src = make_tower(rad[1])
                value = current.lift(src.element(rad[2]))
            else:
                value = current.parse(rad[1])
        except (MalformedSpec, DegenerateExtension):
            raise
        except Exception as exc:  # radicand does not evaluate in the subtower
            raise MalformedSpec(f"radicand of {name!r} does not evaluate: {exc}") from exc
        if value.is_zero():
            raise DegenerateExtension(f"radicand of {name!r} is zero")
        try:
            value.sqrt()
        except NotASquare:
            pass
        else:
            raise DegenerateExtension(f"radicand of {name!r} is already a square in {current}")
        levels.append((name, value.coords))
        current = _intern(list(levels), current)
    return current


QQ = make_tower("Q()")
