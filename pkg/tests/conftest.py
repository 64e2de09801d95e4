import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LONG = os.environ.get("APNFORGE_LONG") == "1"

_acceptance: dict[int, tuple[str, list[str]]] = {}


def pytest_collection_modifyitems(config, items):
    skip = pytest.mark.skip(reason="long run; set APNFORGE_LONG=1")
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("acceptance", (mark.args[0], mark.args[1])))
        if not LONG and "long" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    for key, val in report.user_properties:
        if key != "acceptance":
            continue
        number, title = val
        _, outcomes = _acceptance.setdefault(number, (title, []))
        if report.when == "call" or report.outcome != "passed":
            outcomes.append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, outcomes = _acceptance[number]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif outcomes and all(o == "skipped" for o in outcomes):
            verdict = "SKIP"
        else:
            verdict = "PASS"
        ran = sum(o == "passed" for o in outcomes)
        skipped = sum(o == "skipped" for o in outcomes)
        extra = f" ({skipped} long case(s) skipped)" if skipped and verdict == "PASS" else ""
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}  [{ran} passed]{extra}")
