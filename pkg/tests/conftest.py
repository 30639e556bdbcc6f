from __future__ import annotations

import sys

import pytest

from matroid_biopt.instances import bundled


@pytest.fixture
def seven():
    return bundled("seven_vertex.txt").to_instance()


@pytest.fixture
def knapsack():
    return bundled("knapsack_u36.txt").to_instance()



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
