import os
import re
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)
sys.path.insert(0, os.path.join(os.path.dirname(HERE), "scripts"))

_criteria = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(key, "PASS")
        _criteria[key] = "FAIL" if report.outcome != "passed" or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    by_number = {}
    for (num, name), status in sorted(_criteria.items()):
        by_number.setdefault(num, []).append((name, status))
    for num, items in sorted(by_number.items()):
        failed = [n for n, s in items if s != "PASS"]
        passed = [n for n, s in items if s == "PASS"]
        if failed:
            detail = f"failed: {', '.join(failed)}"
            if passed:
                detail += f"; passed: {', '.join(passed)}"
            terminalreporter.write_line(f"criterion {num}: FAIL  ({detail})")
        else:
            terminalreporter.write_line(f"criterion {num}: PASS  ({', '.join(passed)})")
