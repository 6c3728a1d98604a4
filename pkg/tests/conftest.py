from pathlib import Path

import pytest

from cayleyviz import LabeledDigraph, parse

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def load(name: str, lenient: bool = False) -> LabeledDigraph:
    return parse((DATA / name).read_text(), allow_dangling=lenient)


@pytest.fixture
def six() -> LabeledDigraph:
    """Strongly connected 6-vertex graph with three self-loops."""
    return load("six.cay")


@pytest.fixture
def five_partial() -> LabeledDigraph:
    """Partial 5-vertex graph with empty cells and one dangling successor."""
    return load("five_partial.cay", lenient=True)


@pytest.fixture
def ten_nonsync() -> LabeledDigraph:
    """Complete 10-vertex automaton that no word can synchronize."""
    return load("ten_nonsync.cay")


@pytest.fixture
def ten_repainted() -> LabeledDigraph:
    """Same multigraph as ten_nonsync with row 0 relabeled; synchronizable."""
    return load("ten_repainted.cay")
