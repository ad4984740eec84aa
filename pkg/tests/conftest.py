"""Shared pytest hooks for the test suite."""

import sys


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance-criterion verdict lines after the test run."""
    for name, mod in sys.modules.items():
        if name.endswith("test_acceptance"):
            lines = getattr(mod, "VERDICT_LINES", None)
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
