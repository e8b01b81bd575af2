import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def record():
    """Record one acceptance line; the test still asserts on its own."""

    def _record(number: int, ok: bool, detail: str) -> bool:
        _RESULTS[number] = (ok, detail)
        print(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, detail = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
