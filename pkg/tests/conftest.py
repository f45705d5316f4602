#!/usr/bin/env python3
"""
Pytest configuration for the Cohen-Macaulay toolkit.
"""

import pytest
import asyncio
import json
import sys
from pathlib import Path

# Add the parent directory to the path to import the toolkit
sys.path.insert(0, str(Path(__file__).parent.parent))

from edge_ideals.graph_core import graph_from_edges


@pytest.fixture(scope="session")
def event_loop():
    """Create an instance of the default event loop for the test session."""
    loop = asyncio.get_event_loop_policy().new_event_loop()
    yield loop
    loop.close()


@pytest.fixture
def threshold_path():
    """Threshold family path 1->2->3->4 with weights (1, 2, 2, 1)."""
    return graph_from_edges(4, [(1, 2), (2, 3), (3, 4)], [1, 2, 2, 1])


@pytest.fixture
def p3_graph():
    """Path 1->2->3 with the middle vertex weighted 2."""
    return graph_from_edges(3, [(1, 2), (2, 3)], [1, 2, 1])


@pytest.fixture
def c5_graph():
    """5-cycle whose weighted vertices 2 and 4 are sinks."""
    return graph_from_edges(5, [(1, 2), (3, 2), (3, 4), (5, 4), (5, 1)], [1, 2, 1, 2, 1])


@pytest.fixture
def triangle_graph():
    """Transitively oriented triangle with unit weights."""
    return graph_from_edges(3, [(1, 2), (2, 3), (1, 3)])


@pytest.fixture
def disjoint_edges_graph():
    """Two disjoint edges with weighted sinks."""
    return graph_from_edges(4, [(1, 2), (3, 4)], [1, 2, 1, 2])


@pytest.fixture
def single_edge_graph():
    return graph_from_edges(2, [(1, 2)], [1, 3])


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph document to a temporary JSON file and return its path."""
    def write(document, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document) if not isinstance(document, str) else document, encoding="utf-8")
        return str(path)
    return write
