import pytest

from .codes import code


@pytest.fixture
def ex34():
    return code("ex34")


@pytest.fixture
def ex35():
    return code("ex35")


@pytest.fixture
def ex36():
    return code("ex36")


# filled by test_acceptance; printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE):
        line = f"AC-{number:02d} {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
