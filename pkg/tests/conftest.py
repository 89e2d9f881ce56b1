import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rainbowj import _backend, _kernels_py  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=["python", "compiled"])
def kernel_backend(request, monkeypatch):
    """Run a test once per available kernel implementation."""
    if request.param == "compiled":
        try:
            from rainbowj import _kernels
        except ImportError:
            pytest.skip("compiled extension not built")
        monkeypatch.setattr(_backend, "kernels", _kernels)
    else:
        monkeypatch.setattr(_backend, "kernels", _kernels_py)
    return request.param


@pytest.fixture
def acceptance_report():
    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
