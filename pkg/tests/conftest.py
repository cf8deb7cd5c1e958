from __future__ import annotations

import os
import sys
from typing import Dict

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from evacshuffle.sweep import CHECKS, SweepSpec, run_sweep  # noqa: E402

ACCEPTANCE: Dict[int, tuple] = {}


@pytest.fixture(scope="session")
def full_sweep():
    """Every check on every triple with rows + cols <= 8, shared by the acceptance tests."""
    return run_sweep(SweepSpec(max_n=8, checks=CHECKS, jobs=max(1, min(4, os.cpu_count() or 1))))


@pytest.fixture
def record_criterion(request):
    """Register a criterion; it reads PASS only if the test body returns without raising."""
    holder = {}

    def record(number: int, title: str) -> None:
        holder["key"] = (number, title)
        ACCEPTANCE[number] = (title, "FAIL")

    yield record
    key = holder.get("key")
    if key is None:
        return
    report = getattr(request.node, "rep_call", None)
    if report is not None and report.passed:
        ACCEPTANCE[key[0]] = (key[1], "PASS")


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}")
