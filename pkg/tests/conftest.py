"""Pytest wiring: one summary line per acceptance criterion at the end."""

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid
    if "test_acceptance.py" not in name or "criterion" not in name:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_acceptance):
        short = name.split("::")[-1]
        verdict = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {short}")
