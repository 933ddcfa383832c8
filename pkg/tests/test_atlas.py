from __future__ import annotations

import pytest

from quartica.atlas import UNIVERSAL, atlas_get, get, ids, load_all, tower
from quartica.errors import UnknownId
from quartica.geometry import ProjPoint


def test_every_entry_loads_and_verifies():
    entries = load_all()
    assert len(entries) == len(ids()) >= 26
    for e in entries:
        assert e.source and e.description


def test_unknown_id():
    with pytest.raises(UnknownId):
        atlas_get("no.such.id")


def test_lift_into_universal_tower():
    T = tower(UNIVERSAL)
    pts = get("fermat.mtp", T)
    assert all(p.tower is T for p in pts)
    assert get("kk.quartic", T).contains(get("kk.mtp", T)[0])


def test_entry_counts():
    assert len(get("fermat.mtl")) == 12 and len(get("kk.mtl")) == 12
    assert len(get("fermat.sextactic")) == 48
    assert len(get("kk.sextactic1")) == len(get("kk.sextactic2")) == 12
    assert len(get("fermat.conics")) == 24 and len(get("kk.conics12")) == 12 and len(get("kk.conics6")) == 6
    assert len(set(get("fermat.tacnodes"))) == len(set(get("fermat.quadruple"))) == 24


def test_json_view():
    data = atlas_get("fermat.mtp").to_json()
    assert data["id"] == "fermat.mtp" and len(data["payload"]) == 12
    assert isinstance(get("fermat.mtp")[0], ProjPoint)
