import os

from hypothesis import HealthCheck, settings

# exact cyclotomic arithmetic is slow per example; keep example counts modest
settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num = getattr(report, "criterion", None)
    for key, val in report.user_properties:
        if key == "criterion":
            num = val
    if num is None:
        return
    title = dict(report.user_properties).get("title", "")
    _criteria[num] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, title = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title}")
