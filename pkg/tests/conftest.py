from __future__ import annotations

import pytest
from strategies import TOWER_SPECS

from quartica.field import make_tower


@pytest.fixture(params=list(TOWER_SPECS), ids=list(TOWER_SPECS))
def tower(request):
    return make_tower(TOWER_SPECS[request.param])


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_line(request):
    """Record one summary line per acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(n: int, ok: bool, text: str) -> None:
        lines[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}"
        print(lines[n])

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])


@pytest.fixture(scope="session")
def full_reports():
    """One run of the complete verification suite, shared across test modules."""
    from quartica.reproduce import reproduce

    return reproduce()
