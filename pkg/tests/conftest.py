import pytest

from prepea.fixtures import GPPEA_FIXTURES, fixture_model

# criterion number -> list of (part, passed, detail)
ACCEPTANCE: dict[int, list] = {}


def record(criterion: int, part: str, passed: bool, detail: str = ""):
    ACCEPTANCE.setdefault(criterion, []).append((part, bool(passed), detail))


@pytest.fixture
def accept():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        ok = all(p for _, p, _ in parts)
        tr.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}")
        for part, p, detail in parts:
            tail = f"  [{detail}]" if detail else ""
            tr.write_line(f"    {'pass' if p else 'FAIL'}  {part}{tail}")


@pytest.fixture(scope="session")
def gppea_fixtures():
    return {name: fixture_model(name) for name in GPPEA_FIXTURES}
