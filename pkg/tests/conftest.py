import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ncpara import Compound, GoldEntry, GoldList  # noqa: E402

_criteria = {}


@pytest.fixture
def criterion(request):
    """Label the running test as an acceptance criterion for the summary."""
    def record(label):
        _criteria[request.node.nodeid] = [label, "unknown"]
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.nodeid in _criteria:
        _criteria[item.nodeid][1] = rep.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _criteria.values():
        terminalreporter.write_line("{:<8} {}".format(outcome.upper(), label))


@pytest.fixture
def air_filter():
    return Compound("air", "filter")


@pytest.fixture
def two_entry_gold(air_filter):
    return GoldList(air_filter, [GoldEntry("filter for air", 0, 3), GoldEntry("filter of air", 1, 2)])
