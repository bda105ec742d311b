import numpy as np
import pytest

# criterion number -> list of (part, passed, detail), filled by the acceptance suite
_CRITERIA: dict[int, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def criterion(capsys):
    """Record one part of an acceptance criterion, print it, then assert it."""

    def check(number: int, part: str, passed: bool, detail: str = "") -> None:
        _CRITERIA.setdefault(number, []).append((part, bool(passed), detail))
        with capsys.disabled():
            print(f"\n[criterion {number}] {part}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())
        assert passed, f"criterion {number} ({part}) failed: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        parts = _CRITERIA[number]
        failed = [p for p, ok, _ in parts if not ok]
        status = "PASS" if not failed else "FAIL"
        note = f" (failed: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"criterion {number}: {status}{note}")
