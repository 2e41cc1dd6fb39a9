from __future__ import annotations

import pytest

from lieradicals import catalog
from population import random_population

# criterion number -> (title, failures)
ACCEPTANCE: dict[int, tuple[str, list[str]]] = {}


@pytest.fixture(scope="session")
def catalog_algebras():
    return catalog.default_population()


@pytest.fixture(scope="session")
def random_algebras():
    return random_population()


@pytest.fixture(scope="session")
def population(catalog_algebras, random_algebras):
    return list(catalog_algebras) + list(random_algebras)


@pytest.fixture
def record():
    def _record(number: int, title: str, failures: list[str]) -> None:
        ACCEPTANCE[number] = (title, list(failures))
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, failures = ACCEPTANCE[number]
        status = "PASS" if not failures else f"FAIL ({len(failures)})"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
        for f in failures[:5]:
            terminalreporter.write_line(f"    {f}")
