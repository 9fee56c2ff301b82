import pytest

_RESULTS: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    n, title = mark.args
    detail = getattr(item, "detail", "")
    if rep.failed:
        msg = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
        if msg not in detail:
            detail = f"{detail} {msg}".strip()
    _RESULTS[n] = ("PASS" if rep.passed else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        status, title, detail = _RESULTS[n]
        terminalreporter.write_line(f"{status} criterion {n:2d} {title}: {detail}")
