"""Collects ``@pytest.mark.acceptance(k, label)`` outcomes and prints one line per criterion."""

import pytest

_RESULTS: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key, label = marker.args
    entry = _RESULTS.setdefault(key, {"label": label, "passed": 0, "failed": []})
    if report.when == "call" or report.failed:
        if report.passed:
            entry["passed"] += 1
        elif report.failed or (report.skipped and report.when == "call"):
            entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(_RESULTS):
        entry = _RESULTS[key]
        status = "FAIL" if entry["failed"] or not entry["passed"] else "PASS"
        line = f"criterion {key:2d}: {status}  {entry['label']}"
        if entry["failed"]:
            line += f"  (failing: {', '.join(entry['failed'])})"
        tr.write_line(line)
