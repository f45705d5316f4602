#!/usr/bin/env python3
"""
Tests for the structural theorem tests and their agreement with the oracle.
"""

import random

import pytest

from edge_ideals.cm_engine import is_cm
from edge_ideals.errors import DisagreementError, InvalidParameterError
from edge_ideals.graph_core import graph_from_edges
from edge_ideals.ideals import Monomial, edge_ideal, member, power, symbolic_power
from edge_ideals.theorems import (
    check_witness,
    example_family,
    family_scan,
    ordinary_cm,
    powers_equal,
    solvable,
    symbolic_cm_all_t,
    symbolic_power_contains_ideal,
)


class TestPowersEqual:
    """Test cases for equality of ordinary and symbolic powers."""

    def test_single_edge(self, single_edge_graph):
        verdict = powers_equal(single_edge_graph, 2, verify=True)
        assert verdict.structural is True
        assert verdict.direct is True
        assert verdict.agreement is True

    def test_weighted_non_sink(self, p3_graph):
        """Weighted vertex 2 has an out-edge, so the square is too small."""
        verdict = powers_equal(p3_graph, 2, verify=True)
        assert verdict.structural is False
        assert verdict.reasons == [{"kind": "non_sink_weighted_vertex", "value": 2}]
        assert verdict.witness == Monomial((1, 2, 1))

    def test_triangle_witness(self, triangle_graph):
        verdict = powers_equal(triangle_graph, 2, verify=True)
        assert verdict.structural is False
        assert verdict.reasons == [{"kind": "odd_cycle", "value": 3}]
        assert verdict.witness == Monomial((1, 1, 1))

    def test_five_cycle_depends_on_t(self, c5_graph):
        """The 5-cycle is long enough for t = 2 but not for t = 3."""
        assert powers_equal(c5_graph, 2, verify=True).direct is True
        verdict = powers_equal(c5_graph, 3, verify=True)
        assert verdict.structural is False
        assert verdict.reasons == [{"kind": "odd_cycle", "value": 5}]

    def test_structural_only(self, threshold_path):
        verdict = powers_equal(threshold_path, 2)
        assert verdict.direct is None
        assert verdict.agreement is None
        assert verdict.to_document().theorem == "equal"

    def test_needs_t_at_least_two(self, single_edge_graph):
        with pytest.raises(InvalidParameterError):
            powers_equal(single_edge_graph, 1)

    def test_check_witness_refuses_non_separating_monomials(self, triangle_graph):
        """Monomials inside the square or outside the symbolic square are refused."""
        ordinary = power(edge_ideal(triangle_graph), 2)
        symbolic = symbolic_power(triangle_graph, 2)
        check_witness(ordinary, symbolic, Monomial((1, 1, 1)))
        with pytest.raises(DisagreementError):
            check_witness(ordinary, symbolic, Monomial((1, 0, 0)))
        rng = random.Random(127)
        for _ in range(20):
            base = rng.choice(ordinary.gens)
            inside = Monomial(tuple(e + rng.randint(0, 2) for e in base.exponents))
            with pytest.raises(DisagreementError) as info:
                check_witness(ordinary, symbolic, inside)
            assert info.value.bundle["witness"] == list(inside.exponents)

    def test_random_instances_with_sound_witnesses(self):
        """Structural and direct verdicts agree, and every witness separates the two powers."""
        rng = random.Random(71)
        for _ in range(40):
            n = rng.randint(2, 5)
            edges = [(u, v) if rng.random() < 0.5 else (v, u)
                     for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.5]
            graph = graph_from_edges(n, edges, [rng.randint(1, 2) for _ in range(n)])
            t = rng.choice((2, 3))
            verdict = powers_equal(graph, t, verify=True)
            assert verdict.agreement is True
            if verdict.witness is not None:
                assert member(symbolic_power(graph, t), verdict.witness)
                assert not member(power(edge_ideal(graph), t), verdict.witness)


class TestSymbolicCM:
    """Test cases for Cohen-Macaulayness of all symbolic powers."""

    def test_triangle(self, triangle_graph):
        verdict = symbolic_cm_all_t(triangle_graph, verify_up_to=3)
        assert verdict.structural is True
        assert verdict.failures == []
        assert verdict.agreement is True

    def test_threshold_path_fails_at_three(self, threshold_path):
        verdict = symbolic_cm_all_t(threshold_path, verify_up_to=3)
        assert verdict.structural is False
        assert verdict.failures == [3]
        assert verdict.agreement is True
        assert verdict.reasons[0]["kind"] == "non_clique_component"

    def test_inconclusive_scan(self):
        """C5 is CM at t = 1, so a scan to 1 cannot refute anything."""
        cycle = graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        verdict = symbolic_cm_all_t(cycle, verify_up_to=1)
        assert verdict.structural is False
        assert verdict.agreement is None

    @pytest.mark.parametrize("n, edges", [
        (2, [(1, 2)]),
        (3, [(1, 2), (2, 3), (1, 3)]),
        (5, [(1, 2), (2, 3), (1, 3), (4, 5)]),
        (4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ])
    def test_cliques_random_orientations(self, n, edges):
        """Unions of cliques have CM symbolic powers for any orientation and weights."""
        rng = random.Random(73 + n)
        for _ in range(3):
            oriented = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in edges]
            graph = graph_from_edges(n, oriented, [rng.randint(1, 2) for _ in range(n)])
            for t in (1, 2, 3):
                assert is_cm(symbolic_power(graph, t)).cm

    def test_negative_scan_rejected(self, triangle_graph):
        with pytest.raises(InvalidParameterError):
            symbolic_cm_all_t(triangle_graph, verify_up_to=-1)


class TestOrdinaryCM:
    """Test cases for Cohen-Macaulayness of ordinary powers."""

    def test_square_of_sink_weighted_five_cycle(self, c5_graph):
        verdict = ordinary_cm(c5_graph, 2, verify=True)
        assert verdict.theorem == "cmPower2"
        assert verdict.structural is True
        assert verdict.failures == []
        assert verdict.agreement is True

    def test_square_of_triangle(self, triangle_graph):
        verdict = ordinary_cm(triangle_graph, 2, verify=True)
        assert verdict.structural is False
        assert {"kind": "triangle"} in verdict.reasons
        assert verdict.failures == [2]

    def test_square_of_threshold_path(self, threshold_path):
        verdict = ordinary_cm(threshold_path, 2, verify=True)
        kinds = [r["kind"] for r in verdict.reasons]
        assert "non_sink_weighted_vertex" in kinds
        assert "not_w2" in kinds
        assert verdict.agreement is True

    def test_all_powers_of_disjoint_edges(self, disjoint_edges_graph):
        verdict = ordinary_cm(disjoint_edges_graph, "all", verify=True, scan_to=3)
        assert verdict.theorem == "cmordinary"
        assert verdict.structural is True
        assert verdict.failures == []
        assert verdict.notes["disjoint_edges_strict"] is True

    def test_cube_of_path(self):
        verdict = ordinary_cm(graph_from_edges(3, [(1, 2), (3, 2)]), 3, verify=True)
        assert verdict.theorem == "cmPowers"
        assert verdict.structural is False
        assert verdict.failures == [3]

    def test_isolated_vertex_reading(self):
        """An isolated vertex is reported; the lenient reading still passes."""
        verdict = ordinary_cm(graph_from_edges(3, [(1, 2)], [1, 2, 1]), 3, verify=True)
        assert verdict.structural is True
        assert verdict.notes["isolated"] == [3]
        assert verdict.notes["disjoint_edges_strict"] is False
        assert verdict.agreement is True

    def test_first_power(self, c5_graph, p3_graph):
        """At t = 1 the oracle decides and the necessary conditions must not contradict it."""
        verdict = ordinary_cm(c5_graph, 1)
        assert verdict.theorem == "cm_t1"
        assert verdict.cm is True
        mixed = ordinary_cm(p3_graph, 1)
        assert {"kind": "mixed"} in mixed.reasons
        assert mixed.cm is False

    def test_structural_only(self, triangle_graph):
        verdict = ordinary_cm(triangle_graph, 2)
        assert verdict.oracle == {}
        assert verdict.agreement is None

    @pytest.mark.parametrize("t", [0, -1, "some"])
    def test_invalid_index(self, triangle_graph, t):
        with pytest.raises(InvalidParameterError):
            ordinary_cm(triangle_graph, t)


class TestThresholdFamily:
    """Test cases for the weighted path family."""

    def test_example_family(self):
        graph, threshold = example_family(2)
        assert graph.edges == ((1, 2), (2, 3), (3, 4))
        assert graph.weights == (1, 2, 2, 1)
        assert threshold == 2
        with pytest.raises(InvalidParameterError):
            example_family(0)

    def test_solvable_exactly_above_threshold(self):
        for t in range(1, 7):
            assert (solvable(2, t) is not None) == (t > 2)
        assert solvable(2, 3) == (0, 2, 2, 0)
        assert solvable(1, 2) == (0, 1, 1, 0)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_threshold_is_k(self, k):
        """CM exactly for t <= k, scanning two steps past the threshold."""
        scan = family_scan(k, k + 2)
        assert scan["threshold"] == k
        assert scan["cm_at"] == list(range(1, k + 1))
        assert scan["not_cm_at"] == [k + 1, k + 2]

    def test_family_scan(self):
        scan = family_scan(2, 4)
        assert scan["cm_at"] == [1, 2]
        assert scan["not_cm_at"] == [3, 4]
        assert scan["solvable"]["3"] == [0, 2, 2, 0]
        assert scan["solvable"]["1"] is None

    def test_unweighted_path_scan(self):
        scan = family_scan(1, 2)
        assert scan["cm_at"] == [1]
        assert scan["not_cm_at"] == [2]


class TestContainment:
    """Test cases for I(D) against its first symbolic power."""

    def test_strict_with_embedded_component(self, p3_graph):
        assert symbolic_power_contains_ideal(p3_graph) == {"contained": True, "strict": True}

    def test_equal_without_embedded_component(self, single_edge_graph):
        assert symbolic_power_contains_ideal(single_edge_graph) == {"contained": True, "strict": False}
