import pytest

# criterion number -> (status, detail); filled by tests marked with `criterion`
CRITERIA: dict[int, tuple[str, str]] = {}
DETAILS: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n = mark.args[0]
    if hasattr(rep, "wasxfail"):
        status = "FAIL"
        note = f"{item.name}: expected failure ({rep.wasxfail})"
    elif rep.passed:
        status, note = "PASS", ""
    else:
        status, note = "FAIL", item.name
    old, old_note = CRITERIA.get(n, ("PASS", ""))
    if old == "FAIL":
        status = "FAIL"
    CRITERIA[n] = (status, "; ".join(x for x in (old_note, note) if x))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        status, note = CRITERIA[n]
        extra = DETAILS.get(n, "")
        line = f"criterion {n}: {status}"
        if extra:
            line += f"  {extra}"
        if note:
            line += f"  [{note}]"
        terminalreporter.write_line(line)
