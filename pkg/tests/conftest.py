from __future__ import annotations

import pytest

from slicepoisson.diracred import reduce_chart
from slicepoisson.liecore.invariants import chevalley_invariants
from slicepoisson.orbitkit import load_chart
from slicepoisson.subregular import reduce_to_omega, restrict_invariants

SUBREGULAR = ("g2-subregular", "d4-subregular", "a3-subregular-arnold")


class Pipeline:
    """Lazily computed stages for one shipped chart fixture."""

    def __init__(self, name: str):
        self.name = name
        self.fixture = load_chart(name)
        self._stages: dict = {}

    @property
    def chart(self):
        return self.fixture.chart

    @property
    def realization(self):
        return self.fixture.realization

    def _get(self, key, fn):
        if key not in self._stages:
            self._stages[key] = fn()
        return self._stages[key]

    @property
    def lam(self):
        return self._get("lam", lambda: reduce_chart(self.chart))

    @property
    def invariants(self):
        def compute():
            family = chevalley_invariants(self.realization)
            pinned = self.fixture.casimirs or None
            return restrict_invariants(family, self.chart, self.lam, pinned=pinned)

        return self._get("inv", compute)

    @property
    def casimirs(self):
        return [c.poly for c in self.invariants]

    @property
    def omega(self):
        return self._get("omega", lambda: reduce_to_omega(self.lam, self.casimirs))


_CACHE: dict = {}


def pipeline(name: str) -> Pipeline:
    if name not in _CACHE:
        _CACHE[name] = Pipeline(name)
    return _CACHE[name]


@pytest.fixture(scope="session")
def g2():
    return pipeline("g2-subregular")


@pytest.fixture(scope="session")
def d4():
    return pipeline("d4-subregular")


@pytest.fixture(scope="session")
def a3():
    return pipeline("a3-subregular-arnold")


@pytest.fixture(scope="session", params=SUBREGULAR)
def subregular(request):
    return pipeline(request.param)


# -- acceptance criteria report ---------------------------------------------------------

_CRITERIA: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): test belongs to an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    _, ok = _CRITERIA.get(number, (title, True))
    _CRITERIA[number] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
