import pytest

from labansym import polyhedra as ph

_acceptance = {}


@pytest.fixture(scope="session")
def ico():
    return ph.build("icosahedron")


@pytest.fixture(scope="session")
def octa():
    return ph.build("octahedron")


@pytest.fixture(scope="session")
def cube():
    return ph.build("cube")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _acceptance.get(number, (title, "PASS"))[1]
        status = "PASS" if report.passed and prev == "PASS" else "FAIL"
        _acceptance[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, status = _acceptance[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
