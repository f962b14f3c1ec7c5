from collections import OrderedDict

import pytest

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            num, title = m.args
            _criteria.setdefault(num, {"title": title, "failed": [], "ran": 0, "skipped": 0})
    # report in numeric order regardless of collection order
    ordered = sorted(_criteria.items())
    _criteria.clear()
    _criteria.update(ordered)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if not m or rep.when not in ("setup", "call"):
        return
    entry = _criteria[m.args[0]]
    if rep.skipped:
        entry["skipped"] += 1
    elif rep.when == "call":
        entry["ran"] += 1
        if rep.failed:
            entry["failed"].append(item.name)
    elif rep.failed:
        entry["failed"].append(item.name)


def pytest_terminal_summary(terminalreporter):
    if not any(e["ran"] or e["failed"] for e in _criteria.values()):
        return
    terminalreporter.section("acceptance criteria")
    for num, e in _criteria.items():
        if not (e["ran"] or e["failed"]):
            continue
        verdict = "FAIL" if e["failed"] else "PASS"
        line = f"{verdict}  criterion {num}: {e['title']}"
        if e["failed"]:
            line += "  [failing: " + ", ".join(e["failed"]) + "]"
        if e["skipped"]:
            line += f"  ({e['skipped']} optional item(s) skipped)"
        terminalreporter.write_line(line)
