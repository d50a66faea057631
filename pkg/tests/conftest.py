import time

import pytest

RESULTS = []
START = {}


def pytest_sessionstart(session):
    START["t"] = time.perf_counter()


def pytest_collection_modifyitems(session, config, items):
    # the wall-clock criterion must observe every other test
    last = [it for it in items if it.get_closest_marker("runs_last")]
    items[:] = [it for it in items if it not in last] + last


def pytest_configure(config):
    config.addinivalue_line("markers", "runs_last: schedule after all other tests")


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for ok, name, detail in RESULTS:
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))


@pytest.fixture
def criterion():
    """Record one pass/fail line; the test asserts afterwards."""

    def record(name, ok, detail=""):
        RESULTS.append((bool(ok), name, detail))
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


@pytest.fixture
def session_elapsed():
    return lambda: time.perf_counter() - START["t"]
