from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from edgeprim.catalog import load_catalog, verify_entry  # noqa: E402

CRITERIA = {
    1: "tier-1 catalog reproduction",
    2: "tier-2 catalog reproduction",
    3: "coset-graph biconditional on random triples",
    4: "primitivity against block enumeration",
    5: "primitive prime divisor scan",
    6: "stabilizer instance checks",
    7: "engine properties against brute force",
    8: "projective-line family",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or rep.failed:
        _outcomes.setdefault(mark.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        runs = _outcomes[n]
        verdict = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(
            f"criterion {n}: {verdict}  {CRITERIA.get(n, '')} ({sum(runs)}/{len(runs)} tests)")


@pytest.fixture(scope="session")
def catalog():
    return {e.id: e for e in load_catalog()}


@pytest.fixture(scope="session")
def tier1_reports(catalog):
    return {eid: verify_entry(e) for eid, e in catalog.items() if e.tier == "1"}
