from collections import OrderedDict

import pytest

_criteria = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, label = marker.args
    entry = _criteria.setdefault(number, {"label": label, "failed": []})
    if not report.passed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, entry in sorted(_criteria.items()):
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"AC{number:<2} {status}  {entry['label']}"
        if entry["failed"]:
            line += "  [" + ", ".join(entry["failed"]) + "]"
        terminalreporter.write_line(line)
