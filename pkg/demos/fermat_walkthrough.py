"""Walk through the tangency configuration of the Fermat quartic x^4 + y^4 + z^4.

Run with ``python3 demos/fermat_walkthrough.py``; writes ``demos/fermat.svg``.
"""

from __future__ import annotations

from pathlib import Path

from quartica.atlas import atlas_get
from quartica.contact import contact_order, sextactic_classify
from quartica.geometry import line_census
from quartica.plot import plot_svg

lines = atlas_get("fermat.mtl").payload
points = atlas_get("fermat.mtp").payload
curve = atlas_get("fermat.quartic").payload
tower = atlas_get("fermat.mtl").tower
print(f"field: {tower}")

census = line_census(lines)
print(f"{len(lines)} maximal tangency lines, t-vector {census.t_vector}")

for L in lines[:3]:
    P = next(q for q in points if L.contains(q))
    print(f"  {L}  touches at {P} with contact {contact_order(curve, L, P).order}")

p = points[0]
print(f"osculating conic at {p}: {sextactic_classify(curve, p).classification}")

out = Path(__file__).with_name("fermat.svg")
plot_svg(["fermat.mtl", "fermat.mtp"], chart="z=1", out=out)
print(f"picture written to {out}")
