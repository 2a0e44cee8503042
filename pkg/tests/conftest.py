import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False, help="run long-running stretch checks")
    parser.addoption("--skip-slow", action="store_true", default=False, help="skip tests marked slow")


def pytest_configure(config):
    config.addinivalue_line("markers", "deep: long stretch check, only with --deep")
    config.addinivalue_line("markers", "slow: minutes-scale check (skip with --skip-slow)")
    config.addinivalue_line("markers", "criterion(name): acceptance criterion covered by the test")


def pytest_collection_modifyitems(config, items):
    deep = config.getoption("--deep")
    skip_slow = config.getoption("--skip-slow")
    config._ac_items = sorted({m.args[0] for item in items for m in item.iter_markers("criterion")})
    for item in items:
        if "deep" in item.keywords and not deep:
            item.add_marker(pytest.mark.skip(reason="needs --deep"))
        if "slow" in item.keywords and skip_slow:
            item.add_marker(pytest.mark.skip(reason="--skip-slow given"))


# -- acceptance reporting -------------------------------------------------------------------

_AC_KEY = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance line: ``with criterion("AC-1", limit=1.0): ...``."""
    results = request.config.stash.setdefault(_AC_KEY, {})

    @contextmanager
    def run(name, limit=None, note=""):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            results[name] = ("FAIL", time.perf_counter() - start, f"{type(exc).__name__}: {exc}".splitlines()[0])
            raise
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed > limit:
            results[name] = ("FAIL", elapsed, f"runtime over {limit}s")
            raise AssertionError(f"{name} took {elapsed:.1f}s, limit {limit}s")
        results[name] = ("PASS", elapsed, note)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_AC_KEY, {})
    names = sorted(set(results) | set(getattr(config, "_ac_items", [])), key=lambda s: int(s.split("-")[1]))
    if not names:
        return
    terminalreporter.section("acceptance criteria")
    for name in names:
        status, secs, note = results.get(name, ("SKIPPED", 0.0, "not run"))
        terminalreporter.write_line(f"{name:6s} {status:7s} {secs:8.2f}s  {note}")
