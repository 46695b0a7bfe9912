from __future__ import annotations

import pytest

_ACCEPTANCE: list[tuple[int, str, bool, str]] = []


class CriterionRecorder:
    """Collects one pass/fail line per acceptance criterion."""

    def record(self, number: int, title: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((number, title, ok, detail))
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
        print(line)
        assert ok, line


@pytest.fixture
def criterion() -> CriterionRecorder:
    return CriterionRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number} [{status}] {title}" + (f": {detail}" if detail else ""))
