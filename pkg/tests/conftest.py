from __future__ import annotations

import pytest
from hypothesis import settings

from polynet import fixtures

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fx():
    """Cached access to the bundled fixtures by name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = fixtures.load(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion that ran."""
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
