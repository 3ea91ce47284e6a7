import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from homtool import Budget, Graph
from homtool.hgf import read_hgf

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "homtool" / "fixtures"

# Raised limits so random suites never fall back or give up.
WIDE = Budget(partition_edges=20, partition_edges_injective=20, cover_edges=20)


def fixture_graph(name: str) -> Graph:
    return read_hgf(FIXTURES / f"{name}.hgf")


@pytest.fixture
def fx():
    return fixture_graph


def names(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def random_simple(rng: random.Random, max_n: int = 6, min_n: int = 1) -> Graph:
    n = rng.randint(min_n, max_n)
    p = rng.choice((0.25, 0.45, 0.65, 0.85))
    vs = names(n)
    es = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if rng.random() < p]
    return Graph.build(vs, es)


def random_digraph(rng: random.Random, max_n: int = 5, min_n: int = 1) -> Graph:
    n = rng.randint(min_n, max_n)
    p = rng.choice((0.2, 0.35, 0.5))
    vs = names(n)
    es = [(u, v) for u in vs for v in vs if u != v and rng.random() < p]
    return Graph.build(vs, es, directed=True)


@st.composite
def simple_graphs(draw, max_n: int = 6, min_n: int = 1):
    n = draw(st.integers(min_n, max_n))
    vs = names(n)
    pairs = [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.build(vs, [e for e, keep in zip(pairs, picks) if keep])


@st.composite
def digraphs(draw, max_n: int = 5, min_n: int = 1, loops: bool = False):
    n = draw(st.integers(min_n, max_n))
    vs = names(n)
    pairs = [(u, v) for u in vs for v in vs if loops or u != v]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.build(vs, [e for e, keep in zip(pairs, picks) if keep], directed=True)


@st.composite
def relabellings(draw, g: Graph):
    perm = draw(st.permutations(list(g.vertices)))
    return {v: f"x{w}" for v, w in zip(g.vertices, perm)}


# --- acceptance reporting ---------------------------------------------------------------
# Tests marked ``criterion(n, label)`` get one PASS/FAIL line in the terminal summary.

_CRITERIA: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, label = mark.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[n] = (label, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        label, verdict, seconds = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {verdict} ({seconds:.2f} s) {label}")
