import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qrcc.graph import from_edges  # noqa: E402

ACCEPTANCE = []


@pytest.fixture
def record():
    """Log one acceptance line; call before asserting so failures are logged too."""
    def _record(cid, passed, detail):
        ACCEPTANCE.append((cid, bool(passed), detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {cid}: {detail}")
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, passed, detail in sorted(ACCEPTANCE, key=lambda t: int(t[0].split()[0][1:])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {cid}: {detail}")


@pytest.fixture
def triangle():
    return from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k5():
    return from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
