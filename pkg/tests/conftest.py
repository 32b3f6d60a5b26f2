import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


@pytest.fixture
def record_criterion():
    def record(name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE_RESULTS[name] = ("PASS" if passed else "FAIL", detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        status, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{status} {name} {detail}".rstrip())
