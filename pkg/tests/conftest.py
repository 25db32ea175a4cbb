import os

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _CRITERIA.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        cases = _CRITERIA[k]
        failed = [name for name, ok in cases if not ok]
        status = "PASS" if not failed else "FAIL"
        line = "criterion %2d: %s (%d/%d cases)" % (k, status, len(cases) - len(failed), len(cases))
        if failed:
            line += "  failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
