"""Shared pytest wiring: prints the acceptance scoreboard after the run."""

import sys
import time


def pytest_sessionstart(session):
    session.config._wall_start = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    tr = terminalreporter
    tr.ensure_newline()
    tr.section("acceptance criteria")
    for num, name, passed, detail in sorted(results):
        word = "PASS" if passed else "FAIL"
        line = f"criterion {num:2d} [{word}] {name}"
        if detail:
            line += f" ({detail})"
        tr.write_line(line, green=passed, red=not passed)
    wall = time.perf_counter() - getattr(config, "_wall_start", 0.0)
    tr.write_line(f"suite wall time {wall:.1f}s (target: under 180s)")
