from __future__ import annotations

import pytest

ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def record_criterion(request):
    lines = request.config.stash.setdefault(ACCEPTANCE_LINES, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
