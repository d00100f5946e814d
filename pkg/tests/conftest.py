import random

import pytest
from hypothesis import strategies as st

from weakiasi import Graph

_ACCEPTANCE: list[tuple[str, str]] = []


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(range(n), chosen)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the outcome is printed in the summary."""
    def record(label: str):
        request.node.user_properties.append(("criterion", label))
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        for key, label in item.user_properties:
            if key == "criterion":
                _ACCEPTANCE.append((label, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {label}")
