from __future__ import annotations

import json

from quartica.reproduce import GROUPS, checks, dumps, exit_code, report_json, reproduce


def _stable(reports):
    data = report_json(reports)
    for c in data["checks"]:
        c.pop("elapsed_ms")
    return json.dumps(data, sort_keys=True, default=str)


def test_groups_partition_the_suite():
    all_ids = [c.id for c in checks()]
    assert len(all_ids) == len(set(all_ids))
    assert sorted(all_ids) == sorted(c.id for g in GROUPS for c in checks([g]))


def test_fermat_lines_group(full_reports):
    reports = {r.id: r for r in full_reports}
    r = reports["fermat.lf_census"]
    assert r.status == "pass" and r.computed["t_vector"] == [48, 0, 3]
    assert "48,0,3" in r.description


def test_conic_census_check(full_reports):
    r = next(r for r in full_reports if r.id == "conics.fermat_census")
    assert r.status == "pass" and "960 points" in r.description
    assert (r.computed["distinct"], r.computed["simple"], r.computed["tacnode"], r.computed["quadruple"]) == (960, 912, 24, 24)


def test_no_check_fails(full_reports):
    bad = [(r.id, r.computed) for r in full_reports if r.status not in ("pass", "derived")]
    assert not bad


def test_derived_values(full_reports):
    reports = {r.id: r for r in full_reports}
    assert reports["sextactic.fermat_h2_mtp_multiplicity"].status == "derived"
    assert reports["sextactic.fermat_h2_mtp_multiplicity"].computed["mtp"] == [3]
    assert reports["conics.kk_census12_doubles"].computed == {"simple": 216, "distinct": 228}


def test_deterministic_json():
    a, b = reproduce([2]), reproduce([2])
    assert _stable(a) == _stable(b)
    data = json.loads(dumps(a))
    assert set(data) == {"version", "tower", "checks"}
    assert set(data["checks"][0]) == {"id", "description", "source", "status", "computed", "expected", "elapsed_ms"}


def test_parallel_run_matches_serial():
    assert _stable(reproduce([3], jobs=3)) == _stable(reproduce([3]))


def test_exit_codes():
    assert exit_code(["pass", "derived"]) == 0
    assert exit_code(["pass", "fail", "inconclusive"]) == 1
    assert exit_code(["pass", "inconclusive"]) == 2
