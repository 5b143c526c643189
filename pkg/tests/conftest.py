from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from orthocover.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(e for e, keep in zip(pairs, chosen) if keep))


def brute_force_degeneracy(g: Graph) -> int:
    """Largest minimum degree over all non-empty induced subgraphs."""
    best = 0
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            vs = set(sub)
            best = max(best, min(len(g.neighbours(v) & vs) for v in sub))
    return best


@pytest.fixture
def record_acceptance():
    def record(name: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
