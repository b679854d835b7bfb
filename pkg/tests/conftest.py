import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ctx12():
    from qschur.cycschur import _context

    return _context(2, ("1",))


@pytest.fixture(scope="session")
def ctx22():
    from qschur.cycschur import _context

    return _context(2, ("1", "q"))


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion."""
    from test_acceptance import CRITERIA

    status: dict = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py::test_criterion_" not in rep.nodeid or (rep.when != "call" and key != "error"):
                continue
            n = int(rep.nodeid.split("test_criterion_")[1][:2])
            ok = key == "passed"
            status[n] = status.get(n, True) and ok
    if not status:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(status):
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if status[n] else 'FAIL'}  {CRITERIA[n]}")
