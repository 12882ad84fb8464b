import pytest
from hypothesis import settings

from perfrank.cli import load
from perfrank.rank import SylvesterRank

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("repo")



def pytest_configure(config):
    # criterion number -> (passed, detail), filled by the acceptance tests
    config.acceptance = {}


@pytest.fixture
def acceptance(request):
    return request.config.acceptance


@pytest.fixture(scope="session")
def small():
    return load("smallexample")


@pytest.fixture(scope="session")
def A(small):
    return small.algebras["A"]


@pytest.fixture(scope="session")
def loc(small):
    return small.homs["loc-m2"]


@pytest.fixture(scope="session")
def aug(small):
    return small.homs["aug"]


@pytest.fixture(scope="session")
def sigma_loc(loc):
    return SylvesterRank(loc)


@pytest.fixture(scope="session")
def sigma_aug(aug):
    return SylvesterRank(aug)


@pytest.fixture(scope="session")
def dual():
    return load("dualnumbers")


def pytest_terminal_summary(terminalreporter):
    results = terminalreporter.config.acceptance
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
