from contextlib import contextmanager
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from polytraj.solid import KINDS, build_solid

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=KINDS)
def solid(request):
    return build_solid(request.param)


@pytest.fixture
def dodeca():
    return build_solid("dodecahedron")


@pytest.fixture
def golden():
    return GOLDEN


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException as exc:
            line = f"criterion {number} FAIL: {title} -- {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"
            ACCEPTANCE_LINES.append(line)
            print(line)
            raise
        line = f"criterion {number} PASS: {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
