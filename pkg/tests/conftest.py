from pathlib import Path

import pytest

from threejug.core import Distribution

DATA = Path(__file__).parent / "data"

_criteria: dict[str, tuple[str, str]] = {}


def read_edge_file(path: Path) -> list[tuple[Distribution, Distribution]]:
    edges = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        left, right = (part.strip() for part in line.split("->"))
        edges.append(
            (Distribution(*map(int, left.split(","))), Distribution(*map(int, right.split(","))))
        )
    return edges


@pytest.fixture
def figure2_edges():
    return read_edge_file(DATA / "figure2_edges.txt")


def pytest_runtest_logreport(report):
    label = dict(report.user_properties).get("criterion")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[report.nodeid] = (label, report.outcome)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in sorted(_criteria.values()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {label}")
