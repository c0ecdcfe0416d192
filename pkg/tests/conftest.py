from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tmcf.exactalg import Polynomial

small_fracs = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=5),
)


def polys(max_degree=30, nonzero=False):
    s = st.lists(small_fracs, min_size=1 if nonzero else 0, max_size=max_degree + 1).map(Polynomial)
    if nonzero:
        s = s.filter(lambda p: not p.is_zero())
    return s


# -- acceptance summary: one line per criterion -------------------------------

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    info = getattr(report, "criterion", None)
    if info is None:
        return
    n, title = info
    entry = _criteria.setdefault(n, {"title": title, "passed": True, "failed": []})
    if report.failed:
        entry["passed"] = False
        entry["failed"].append(report.nodeid.split("::")[-1])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        e = _criteria[n]
        status = "PASS" if e["passed"] else "FAIL"
        extra = "" if e["passed"] else f"  ({', '.join(e['failed'])})"
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {e['title']}{extra}")
