#!/usr/bin/env python3
"""
End-to-end validation of the structural theorems against the oracle on
small graphs: the weighted path family, exhaustive power equality and
squares, and soundness of every witness.
"""

import pytest

from edge_ideals.cm_engine import depth, is_cm
from edge_ideals.graph_core import graph_from_edges
from edge_ideals.ideals import (
    MonomialIdeal,
    edge_ideal,
    equals,
    intersect_all,
    member,
    power,
    primary_decomposition,
    symbolic_power,
)
from edge_ideals.theorems import example_family, ordinary_cm, powers_equal, solvable
from sweeps.instance_generator import InstanceGenerator

CONNECTED_WITH_EDGES = ["K2", "P3", "K3", "P4", "star", "C4", "paw", "diamond", "K4"]


@pytest.fixture(scope="module")
def generator():
    return InstanceGenerator()


class TestThresholdFamily:
    """The k = 2 member of the weighted path family."""

    def test_five_components(self):
        graph, _ = example_family(2)
        components = primary_decomposition(graph)
        expected = [
            ((1, 0, 0, 0), (0, 0, 1, 0)),
            ((0, 2, 0, 0), (0, 0, 1, 0)),
            ((0, 1, 0, 0), (0, 0, 0, 1)),
            ((1, 0, 0, 0), (0, 0, 2, 0), (0, 0, 0, 1)),
            ((0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 1)),
        ]
        assert components == [MonomialIdeal.from_exponents(4, gens) for gens in expected]
        assert equals(intersect_all(4, components), edge_ideal(graph))

    def test_cm_threshold(self):
        graph, threshold = example_family(2)
        verdicts = {t: is_cm(symbolic_power(graph, t)).cm for t in (1, 2, 3, 4)}
        assert verdicts == {1: True, 2: True, 3: False, 4: False}
        assert all(solvable(2, t) is not None for t in (3, 4, 5, 6))
        assert all(solvable(2, t) is None for t in range(1, threshold + 1))

    def test_depth_methods_agree_on_family_ideals(self):
        graph, _ = example_family(2)
        for t in (1, 2, 3):
            for ideal in (power(edge_ideal(graph), t), symbolic_power(graph, t)):
                report = depth(ideal, method="both")
                assert report.depth == report.depth_colon


class TestPowerEquality:
    """Structural equality test against direct comparison of the square."""

    def test_exhaustive_squares(self, generator):
        """Every connected graph on at most four vertices, every orientation, weights 1 and 2."""
        instances = generator.exhaustive(max_vertices=4, names=CONNECTED_WITH_EDGES)
        for instance in instances:
            verdict = powers_equal(instance.graph, 2, verify=True)
            assert verdict.agreement is True, instance.instance_id
            if verdict.witness is not None:
                assert member(symbolic_power(instance.graph, 2), verdict.witness)
                assert not member(power(edge_ideal(instance.graph), 2), verdict.witness)

    @pytest.mark.parametrize("t", [2, 3])
    def test_random_five_vertex_graphs(self, generator, t):
        """200 seeded five-vertex graphs at both t = 2 and t = 3."""
        for instance in generator.random_instances(200, 5, seed=99):
            if not instance.graph.edges:
                continue
            verdict = powers_equal(instance.graph, t, verify=True)
            assert verdict.agreement is True, instance.instance_id
            if verdict.witness is not None:
                assert member(symbolic_power(instance.graph, t), verdict.witness)
                assert not member(power(edge_ideal(instance.graph), t), verdict.witness)


class TestSquares:
    """Cohen-Macaulayness of the square of the edge ideal."""

    def test_exhaustive_small_graphs(self, generator):
        """Every connected graph on at most four vertices, every orientation, weights 1 and 2."""
        for instance in generator.exhaustive(max_vertices=4, names=CONNECTED_WITH_EDGES):
            verdict = ordinary_cm(instance.graph, 2, verify=True)
            assert verdict.agreement is True, instance.instance_id

    def test_sink_weighted_five_cycle(self, c5_graph):
        verdict = ordinary_cm(c5_graph, 2, verify=True)
        assert verdict.structural is True
        assert verdict.cm is True

    def test_triangle(self):
        triangle = graph_from_edges(3, [(1, 2), (2, 3), (3, 1)])
        verdict = ordinary_cm(triangle, 2, verify=True)
        assert verdict.structural is False
        assert verdict.cm is False
