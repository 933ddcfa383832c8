from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

TOWER_SPECS = {
    "Q": "Q()",
    "gauss": "Q(i:-1)",
    "fermat": "Q(i:-1,r2:2,q2:r2)",
    "kk": "Q(i:-1,s5:5)",
    "universal": "Q(i:-1,r2:2,q2:r2,s3:3,s5:5)",
}

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


def elements(tower, density: float = 0.5):
    """Strategy for elements of ``tower`` with small rational coordinates."""
    coord = st.one_of(st.just(Fraction(0)), small_rationals) if density < 1 else small_rationals
    return st.lists(coord, min_size=tower.degree, max_size=tower.degree).map(tower.element)
