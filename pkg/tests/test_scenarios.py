from __future__ import annotations

from pathlib import Path

import pytest

from quartica.dsl import evaluate

SCENARIOS = sorted((Path(__file__).resolve().parent.parent / "scenarios").glob("*.qsc"))


@pytest.mark.parametrize("path", SCENARIOS, ids=lambda p: p.stem)
def test_scenario_file(path):
    result = evaluate(path.read_text(encoding="utf-8"))
    statuses = {c.status for c in result.checks}
    if path.stem == "negative_control":
        assert statuses == {"fail"}
    else:
        assert statuses == {"pass"}, result.text_report()


def test_scenarios_present():
    assert len(SCENARIOS) >= 5
