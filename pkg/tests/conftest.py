from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from kempeminor.graph import Graph, build_graph

from .acceptance_log import ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        passed, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return build_graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261018)
