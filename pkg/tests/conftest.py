import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_verdicts: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        name = report.nodeid.split("::")[-1]
        if report.outcome == "passed" and report.when == "call":
            _verdicts.setdefault(name, "PASS")
        elif report.outcome != "passed":
            _verdicts[name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_verdicts):
        number, _, title = name[len("test_criterion_"):].partition("_")
        terminalreporter.write_line(f"{_verdicts[name]} criterion {int(number)}: {title.replace('_', ' ')}")
