"""Diagnostic SVG pictures of atlas entries in an affine chart.

Real objects are drawn solid.  Non-real points (hollow) and lines (dashed)
are drawn through the shadow map Re + Im applied to affine coordinates and
to line coefficients normalized on the first chart coordinate.  The map is
the identity on real objects; for the rest the picture is schematic and
need not preserve incidences.  Curves and forms are contoured on a grid when
their coefficients are real.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .atlas import atlas_get  # noqa: E402
from .contact import PlaneCurve  # noqa: E402
from .errors import MalformedSpec, NothingVisible  # noqa: E402
from .geometry import Conic, ProjLine, ProjPoint  # noqa: E402
from .poly import MultiPoly  # noqa: E402

TOL = 1e-9


def parse_chart(chart: str) -> int:
    """Index of the coordinate set to 1: ``"z=1"`` gives 2."""
    text = chart.replace(" ", "")
    if text not in ("x=1", "y=1", "z=1"):
        raise MalformedSpec(f"chart must be one of x=1, y=1, z=1, not {chart!r}")
    return "xyz".index(text[0])


def _is_real(values) -> bool:
    return all(abs(v.imag) <= TOL * max(1.0, abs(v)) for v in values)


def _shadow(v: complex) -> float:
    return v.real + v.imag


def _affine(p: ProjPoint, k: int):
    c = p.embed()
    if abs(c[k]) <= TOL:
        return None
    a, b = [c[j] / c[k] for j in range(3) if j != k]
    return (_shadow(a), _shadow(b)), _is_real((a, b))


def _line_coeffs(L: ProjLine, k: int):
    c = list(L.embed())
    order = [j for j in range(3) if j != k] + [k]
    m = next(c[j] for j in order if abs(c[j]) > TOL)
    c = [v / m for v in c]
    a, b = [c[j] for j in range(3) if j != k]
    return (_shadow(a), _shadow(b), _shadow(c[k])), _is_real(c)


def _numeric_form(form: MultiPoly, k: int):
    terms = [(e, c.embed()) for e, c in form.sorted_terms()]
    if not _is_real([c for _, c in terms]):
        return None
    others = [j for j in range(3) if j != k]

    def f(X, Y):
        out = np.zeros_like(X)
        for e, c in terms:
            out = out + c.real * X ** e[others[0]] * Y ** e[others[1]]
        return out

    return f


def _flatten(value) -> list:
    if isinstance(value, (list, tuple)):
        return [x for v in value for x in _flatten(v)]
    return [value]


def plot_svg(ids: Sequence[str], chart: str = "z=1", out: str | Path | None = None, window: float | None = None, grid: int = 400) -> str:
    """Render the entries ``ids`` in the chart and return the SVG text."""
    if not ids:
        raise NothingVisible("no entries to draw")
    k = parse_chart(chart)
    objects = []
    for id_ in ids:
        for n, obj in enumerate(_flatten(atlas_get(id_).payload)):
            objects.append((f"{id_}-{n}", obj))

    points, lines, forms = [], [], []
    for gid, obj in objects:
        if isinstance(obj, ProjPoint):
            aff = _affine(obj, k)
            if aff is not None:
                points.append((gid, *aff))
        elif isinstance(obj, ProjLine):
            lines.append((gid, *_line_coeffs(obj, k)))
        elif isinstance(obj, (PlaneCurve, Conic, MultiPoly)):
            form = obj.form if isinstance(obj, PlaneCurve) else obj.form() if isinstance(obj, Conic) else obj
            f = _numeric_form(form, k)
            if f is not None:
                forms.append((gid, f))

    if window is None:
        reach = [max(abs(a), abs(b)) for _, (a, b), _ in points]
        window = min(max([2.0] + [1.3 * r for r in reach]), 10.0)

    with matplotlib.rc_context({"svg.hashsalt": "quartica"}):
        return _render(ids, chart, k, points, lines, forms, window, grid, out)


def _render(ids, chart, k, points, lines, forms, R, grid, out) -> str:
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.set_xlim(-R, R)
    ax.set_ylim(-R, R)
    ax.set_aspect("equal")
    u, v = "xyz".replace("xyz"[k], "")
    ax.set_xlabel(f"{u}/{'xyz'[k]}")
    ax.set_ylabel(f"{v}/{'xyz'[k]}")
    drawn = 0

    for gid, (a, b, c), real in lines:
        style = "-" if real else "--"
        if abs(b) >= abs(a) and abs(b) > TOL:
            X = np.array([-R, R])
            Y = -(a * X + c) / b
        elif abs(a) > TOL:
            Y = np.array([-R, R])
            X = -(b * Y + c) / a
        else:
            continue  # the line at infinity of this chart
        ax.plot(X, Y, style, color="black", linewidth=1.2, gid=f"line-{gid}")
        drawn += 1

    xs = np.linspace(-R, R, grid)
    X, Y = np.meshgrid(xs, xs)
    for gid, f in forms:
        cs = ax.contour(X, Y, f(X, Y), levels=[0.0], colors="tab:blue", linewidths=1.2)
        cs.set_gid(f"curve-{gid}")
        if any(len(seg) for seg in cs.allsegs[0]):
            drawn += 1

    for gid, (a, b), real in points:
        x, y = a, b
        if abs(x) > R or abs(y) > R:
            continue
        face = "tab:red" if real else "white"
        ax.plot([x], [y], "o", markersize=5, markerfacecolor=face, markeredgecolor="tab:red", gid=f"point-{gid}")
        drawn += 1

    if drawn == 0:
        plt.close(fig)
        raise NothingVisible(f"nothing of {', '.join(ids)} is visible in the chart {chart}")

    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    plt.close(fig)
    svg = buf.getvalue()
    if out is not None:
        Path(out).write_text(svg)
    return svg
