"""Shared test plumbing: collects acceptance-criterion outcomes for the
terminal summary so a plain ``pytest`` run ends with one line per criterion.
"""

CRITERION_LINES: list[str] = []


def record_criterion(number: int, passed: bool, text: str) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {text}"
    CRITERION_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(CRITERION_LINES):
        terminalreporter.write_line(line)
