"""Shared pytest wiring for the suite.

The acceptance tests record one line per criterion; the terminal
summary hook below repeats those lines at the end of the run so they
are visible even without -s.  The module is looked up in sys.modules
rather than imported: importing here could create a second, empty
instance under a different dotted name.
"""

from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for name, module in list(sys.modules.items()):
        if name.rpartition(".")[2] == "test_acceptance" and module:
            lines.extend(getattr(module, "REPORT_LINES", []))
    if not lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
