from collections import OrderedDict

import pytest

# criterion number -> list of (label, passed)
ACCEPTANCE = OrderedDict()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    label = item.callspec.id if hasattr(item, "callspec") else item.name
    ACCEPTANCE.setdefault(marker.args[0], []).append((label, rep.passed))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        failed = [label for label, ok in parts if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {number}: {status} ({len(parts) - len(failed)}/{len(parts)} checks)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
