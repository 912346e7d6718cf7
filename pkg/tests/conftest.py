from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from treespan import Graph, prufer_decode, validate_tree


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 40):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return prufer_decode(seq, n)


def tree_from_edges(n, edges):
    return validate_tree(Graph.from_edges(n, edges))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def h_tree():
    # two adjacent degree-3 hubs (0 and 1), each carrying two leaves
    return tree_from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
