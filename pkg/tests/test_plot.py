from __future__ import annotations

import re

import pytest

from quartica.errors import MalformedSpec, NothingVisible
from quartica.plot import plot_svg


def _count(svg: str, kind: str) -> int:
    return len(re.findall(rf'id="{kind}-', svg))


def test_mtp_line_arrangement(tmp_path):
    out = tmp_path / "fig.svg"
    svg = plot_svg(["fermat.mtp_lines", "fermat.mtp"], chart="z=1", out=out)
    assert out.read_text() == svg and svg.lstrip().startswith("<?xml")
    assert _count(svg, "line") == 12
    # four of the twelve MTPs lie on z = 0, the line at infinity of this chart
    assert _count(svg, "point") == 8
    assert _count(plot_svg(["fermat.mtp"], chart="x=1"), "point") == 8


def test_real_curve_is_contoured():
    svg = plot_svg(["kk.quartic", "kk.mtl"])
    assert _count(svg, "curve") == 1 and _count(svg, "line") == 12


def test_nothing_visible():
    with pytest.raises(NothingVisible):
        plot_svg([])
    # the Fermat quartic has no real points
    with pytest.raises(NothingVisible):
        plot_svg(["fermat.quartic"])


def test_bad_chart():
    with pytest.raises(MalformedSpec):
        plot_svg(["fermat.mtp"], chart="w=1")


def test_deterministic_output():
    assert plot_svg(["kk.mtl", "kk.mtp"]) == plot_svg(["kk.mtl", "kk.mtp"])
