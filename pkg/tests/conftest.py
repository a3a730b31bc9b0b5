import os
import sys
from pathlib import Path

# every mutation re-validates the embedding while the suite runs
os.environ.setdefault("BASEDFVS_DEBUG", "1")
sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
