import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# Lines recorded by the acceptance checks, shown after the run.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
