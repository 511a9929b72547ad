import pytest

CRITERIA = {
    1: "table reproduction",
    2: "R_q integrality and generator independence",
    3: "det A_q relations",
    4: "local behaviour of R_q mod p",
    5: "det A_p reconstruction of R_p",
    6: "lemma suite",
    7: "Carlitz and Wu-Wang cross-identities",
}

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _outcomes.setdefault(mark.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n, title in CRITERIA.items():
        runs = _outcomes.get(n)
        if not runs:
            continue
        bad = [name for name, o in runs if o != "passed"]
        status = "PASS" if not bad else "FAIL"
        extra = f"  (failing: {', '.join(bad)})" if bad else ""
        tr.write_line(f"criterion {n} [{status}] {title}{extra}")
