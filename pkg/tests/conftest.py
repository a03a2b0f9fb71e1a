from __future__ import annotations

import os

import pytest

from acceptance_log import VERDICTS


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow checks (E6 BFS)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("WEYLORBITS_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; use --runslow or WEYLORBITS_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
