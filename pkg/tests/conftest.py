import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import hypothesis.strategies as st
import pytest

from partalg.diagrams import SetPartitionDiagram


@st.composite
def diagrams(draw, min_rank=1, max_rank=3, rank=None):
    """Random diagram built from a random restricted growth string."""
    k = rank if rank is not None else draw(st.integers(min_rank, max_rank))
    labels = []
    top = -1
    for _ in range(2 * k):
        x = draw(st.integers(0, top + 1))
        labels.append(x)
        top = max(top, x)
    return SetPartitionDiagram(tuple(labels))


@pytest.fixture(autouse=True)
def _no_cap_override(monkeypatch):
    monkeypatch.delenv("PA_MAX_RANK", raising=False)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.verdict_lines():
        terminalreporter.write_line(line)
