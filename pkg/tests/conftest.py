import os
import re
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("default")

# acceptance criteria report: filled by tests/test_acceptance.py
CRITERIA: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(re.match(r"\d+", k).group()), k)):
        ok, detail = CRITERIA[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
