import pytest

from vecgroupoid.enumspace import SpaceRef
from vecgroupoid.linalg import FieldSpec

CRITERIA = {
    1: "construction soundness",
    2: "induced-groupoid soundness",
    3: "mutation detection",
    4: "derived laws follow from the axioms",
    5: "universal factorization",
    6: "transitivity",
    7: "pair identity spot check",
    8: "cli contract",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test covers")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for n in getattr(report, "criteria", ()):
        _outcomes.setdefault(n, []).append(report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    rep.criteria = tuple(m.args[0] for m in item.iter_markers("criterion"))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, name in CRITERIA.items():
        runs = _outcomes.get(n)
        if runs is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(runs) else "FAIL"
        terminalreporter.write_line(f"criterion {n} ({name}): {status}")


def space(dim: int, p: int) -> SpaceRef:
    return SpaceRef(dim, FieldSpec(p))


@pytest.fixture
def gf2():
    return FieldSpec(2)


@pytest.fixture
def gf3():
    return FieldSpec(3)
