import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def _isolated_cache(tmp_path_factory):
    # keep test runs away from the user's order cache
    d = tmp_path_factory.mktemp("order-cache")
    old = os.environ.get("CPTWEYL_CACHE_DIR")
    os.environ["CPTWEYL_CACHE_DIR"] = str(d)
    yield d
    if old is None:
        os.environ.pop("CPTWEYL_CACHE_DIR", None)
    else:
        os.environ["CPTWEYL_CACHE_DIR"] = old


@pytest.fixture(scope="session")
def full_report(_isolated_cache):
    """One cold-cache run of the whole registry, shared by the suites that need it."""
    from cptweyl.claims import builtin_claims, run
    return run(builtin_claims(), cache_dir=str(_isolated_cache))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
