import contextlib

import pytest

_CRITERIA: dict[int, tuple[str, bool, str]] = {}


@contextlib.contextmanager
def _record(number: int, title: str):
    detail = ""
    try:
        yield
    except BaseException as exc:
        detail = f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
        _CRITERIA[number] = (title, False, detail)
        raise
    _CRITERIA[number] = (title, True, detail)


@pytest.fixture
def criterion():
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[n]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
