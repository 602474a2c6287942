from functools import lru_cache

import pytest

from eer_garside.garside import EERGarside


@lru_cache(maxsize=None)
def monoid(e: int, r: int) -> EERGarside:
    """Shared monoids so complement caches survive across tests."""
    return EERGarside(e, r)


@pytest.fixture
def g33() -> EERGarside:
    return monoid(3, 3)


def grid(e_max: int, r_max: int, e_min: int = 1, r_min: int = 2):
    return [(e, r) for e in range(e_min, e_max + 1) for r in range(r_min, r_max + 1)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n][1])
