import sys
from pathlib import Path

import pytest

from catalan_tableaux.terms import make_signature

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def V():
    return make_signature([("V", 2)])


@pytest.fixture
def VW():
    return make_signature([("V", 2), ("W", 2)])


@pytest.fixture
def VWY():
    return make_signature([("V", 2), ("W", 2), ("Y", 2)])


@pytest.fixture
def VU():
    return make_signature([("V", 2), ("U", 3)])


@pytest.fixture
def U():
    return make_signature([("U", 3)])


def arity_map(sig):
    return {op.symbol: op.arity for op in sig.ops}


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        number, title = marker.args
        _acceptance.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance):
        terminalreporter.write_line(f"[{'PASS' if outcome == 'passed' else 'FAIL'}] {number:>2}. {title}")
