import contextlib

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance criterion as PASS or FAIL."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextlib.contextmanager
    def record(name):
        try:
            yield
        except BaseException:
            results.append((name, False))
            raise
        results.append((name, True))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
