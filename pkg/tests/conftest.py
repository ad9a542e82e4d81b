"""Shared fixtures, and the per-criterion summary printed after acceptance runs."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: dict[int, tuple[str, str, float]] = {}


def pytest_runtest_makereport(item, call):
    crit = getattr(getattr(item, "function", None), "criterion", None)
    if crit is None or call.when != "call":
        return
    number, title = crit
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _RESULTS[number] = (outcome, title, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        outcome, title, seconds = _RESULTS[number]
        terminalreporter.write_line(f"{outcome} criterion {number:2d}: {title} ({seconds:.2f} s)")
    passed = sum(r[0] == "PASS" for r in _RESULTS.values())
    terminalreporter.write_line(f"{passed}/{len(_RESULTS)} criteria passed")


@pytest.fixture
def run_cli(capsys):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    from kunzlattice.cli import main

    def run(*argv: str):
        code = main([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return run
