#!/usr/bin/env python3
"""
Unit tests for simplicial complexes, vertex covers and exact homology.
"""

import itertools
import random

import networkx as nx
import pytest

from edge_ideals.complexes import (
    RATIONALS,
    CoefficientField,
    SimplicialComplex,
    check_ambient,
    homology_ranks,
    independence_complex,
    is_connected,
    is_matroid,
    link,
    minimal_vertex_covers,
    reisner_cm,
    sr_depth,
    strong_cover,
    strong_vertex_covers,
    well_covered_report,
)
from edge_ideals.errors import CapExceededError, FieldError, NotAFaceError, VoidComplexError
from edge_ideals.graph_core import SimpleGraph, underlying_graph
from edge_ideals.models import ComplexDocument

GF2 = CoefficientField(2)
GF3 = CoefficientField(3)

# 6-vertex triangulation of the real projective plane
PROJECTIVE_PLANE = [
    {1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
    {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6},
]


def complex_of(n, facets):
    return SimplicialComplex(n, tuple(frozenset(f) for f in facets))


def random_simple_graph(rng, n, density=0.5):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < density]
    return SimpleGraph(n, tuple(edges))


class TestSimplicialComplex:
    """Test cases for complex construction."""

    def test_facets_are_maximalized(self):
        """Faces contained in other facets are dropped."""
        delta = complex_of(3, [{1, 2}, {1}, {3}])
        assert delta.facets == (frozenset({1, 2}), frozenset({3}))
        assert delta.dim == 1
        assert not delta.is_pure()

    def test_void_and_empty_complex_differ(self):
        """The void complex has no faces; {∅} has exactly one."""
        void = SimplicialComplex.void_complex(2)
        empty = complex_of(2, [])
        assert void.faces == ()
        assert empty.faces == (frozenset(),)
        assert void.dim == -1 and empty.dim == -1
        assert void.to_dict() == {"n": 2, "void": True}
        assert empty.to_dict() == {"n": 2, "facets": [[]]}

    def test_document(self):
        document = complex_of(3, [{1, 2}, {3}]).to_document()
        assert isinstance(document, ComplexDocument)
        assert document.facets == [[1, 2], [3]]
        assert document.void is None
        assert ComplexDocument.model_validate(document.model_dump()) == document

    def test_faces_in_size_order(self):
        delta = complex_of(3, [{1, 2}, {3}])
        assert delta.faces == (frozenset(), frozenset({1}), frozenset({2}), frozenset({3}), frozenset({1, 2}))

    def test_link(self):
        """The link of a vertex of the triangle boundary is two points."""
        circle = complex_of(3, [{1, 2}, {2, 3}, {1, 3}])
        assert link(circle, {1}).facets == (frozenset({2}), frozenset({3}))
        assert link(circle, {1, 2}).facets == (frozenset(),)
        with pytest.raises(NotAFaceError):
            link(circle, {1, 2, 3})

    def test_connectivity(self):
        assert is_connected(complex_of(3, [{1, 2}, {2, 3}, {1, 3}]))
        assert not is_connected(complex_of(4, [{1, 2}, {3, 4}]))
        assert is_connected(complex_of(1, [{1}]))

    def test_ambient_cap(self):
        with pytest.raises(CapExceededError):
            check_ambient(21)


class TestCoefficientField:
    """Test cases for field parsing."""

    def test_parse(self):
        assert CoefficientField.parse("q") == RATIONALS
        assert CoefficientField.parse("QQ").name == "q"
        assert CoefficientField.parse("GF:3").name == "gf:3"

    @pytest.mark.parametrize("text", ["gf:4", "gf:x", "r", "gf:1"])
    def test_rejects_invalid_fields(self, text):
        with pytest.raises(FieldError):
            CoefficientField.parse(text)


class TestHomology:
    """Test cases for reduced homology ranks."""

    def test_circle(self):
        profile = homology_ranks(complex_of(3, [{1, 2}, {2, 3}, {1, 3}]))
        assert profile.ranks == (0, 0, 1)
        assert profile.rank(1) == 1

    def test_two_sphere(self):
        """The boundary of the tetrahedron has one 2-dimensional class."""
        sphere = complex_of(4, [set(f) for f in itertools.combinations(range(1, 5), 3)])
        profile = homology_ranks(sphere)
        assert profile.rank(2) == 1
        assert profile.rank(0) == profile.rank(1) == 0

    def test_disconnected(self):
        """Two points and two disjoint edges both have one reduced H0 class."""
        assert homology_ranks(complex_of(2, [{1}, {2}])).rank(0) == 1
        assert homology_ranks(complex_of(4, [{1, 2}, {3, 4}])).rank(0) == 1
        assert homology_ranks(complex_of(3, [{1}, {2}, {3}])).rank(0) == 2

    def test_empty_complex(self):
        """{∅} has a single reduced class in degree -1."""
        profile = homology_ranks(complex_of(2, []))
        assert profile.rank(-1) == 1

    def test_void_and_simplex_are_acyclic(self):
        assert homology_ranks(SimplicialComplex.void_complex(3)).is_zero()
        assert homology_ranks(SimplicialComplex.simplex(3)).is_zero()

    def test_projective_plane_depends_on_characteristic(self):
        """RP2 is acyclic over QQ and has H1 = H2 = 1 over GF(2)."""
        plane = complex_of(6, PROJECTIVE_PLANE)
        assert homology_ranks(plane, RATIONALS).is_zero()
        over_gf2 = homology_ranks(plane, GF2)
        assert over_gf2.rank(1) == 1
        assert over_gf2.rank(2) == 1
        assert over_gf2.rank(0) == 0

    def test_projective_plane_cohen_macaulay_over_qq_only(self):
        plane = complex_of(6, PROJECTIVE_PLANE)
        assert reisner_cm(plane, RATIONALS)
        assert not reisner_cm(plane, GF2)


class TestReisner:
    """Test cases for the Reisner criterion and link-homology depth."""

    def test_connected_curve_is_cm(self):
        circle = complex_of(3, [{1, 2}, {2, 3}, {1, 3}])
        assert reisner_cm(circle)
        assert sr_depth(circle) == 2

    def test_disconnected_curve_is_not_cm(self):
        """Two disjoint edges: dimension 1 but depth 1."""
        delta = complex_of(4, [{1, 2}, {3, 4}])
        assert not reisner_cm(delta)
        assert sr_depth(delta) == 1

    def test_points_are_cm(self):
        assert reisner_cm(complex_of(3, [{1}, {2}, {3}]))

    def test_void_complex(self):
        assert reisner_cm(SimplicialComplex.void_complex(2))
        with pytest.raises(VoidComplexError):
            sr_depth(SimplicialComplex.void_complex(2))

    def test_matroid_complexes_are_cm(self):
        """Independence complexes that are matroids satisfy the Reisner criterion."""
        rng = random.Random(83)
        seen = 0
        for _ in range(60):
            delta = independence_complex(random_simple_graph(rng, rng.randint(3, 6)))
            if is_matroid(delta):
                seen += 1
                assert reisner_cm(delta)
        assert seen > 0

    def test_depth_of_simplex_and_two_points(self):
        assert sr_depth(SimplicialComplex.simplex(3)) == 3
        assert sr_depth(complex_of(2, [{1}, {2}])) == 1

    def test_full_depth_iff_reisner(self):
        """sr_depth reaches dim + 1 exactly on Cohen-Macaulay complexes."""
        rng = random.Random(89)
        for _ in range(60):
            delta = independence_complex(random_simple_graph(rng, rng.randint(3, 6)))
            depth = sr_depth(delta)
            assert depth <= delta.dim + 1
            assert (depth == delta.dim + 1) == reisner_cm(delta)

    def test_field_independence_on_small_complexes(self):
        """Independence complexes on at most five vertices have no torsion."""
        rng = random.Random(97)
        for _ in range(60):
            delta = independence_complex(random_simple_graph(rng, rng.randint(3, 5)))
            ranks = homology_ranks(delta, RATIONALS).ranks
            assert homology_ranks(delta, GF2).ranks == ranks
            assert homology_ranks(delta, GF3).ranks == ranks


class TestMatroids:
    """Test cases for the exchange property on independence complexes."""

    def test_four_cycle_is_not_a_matroid(self):
        delta = independence_complex(SimpleGraph(4, ((1, 2), (2, 3), (3, 4), (1, 4))))
        assert delta.facets == (frozenset({1, 3}), frozenset({2, 4}))
        assert not is_matroid(delta)

    def test_triangle_plus_edge_is_a_matroid(self):
        delta = independence_complex(SimpleGraph(5, ((1, 2), (2, 3), (1, 3), (4, 5))))
        assert len(delta.facets) == 6
        assert is_matroid(delta)

    def test_matroid_graphs_are_disjoint_cliques(self):
        """A matroid independence complex forces every component to be complete."""
        rng = random.Random(101)
        for _ in range(80):
            graph = random_simple_graph(rng, rng.randint(3, 6))
            if not is_matroid(independence_complex(graph)):
                continue
            g = graph.to_networkx()
            for component in nx.connected_components(g):
                size = len(component)
                assert g.subgraph(component).number_of_edges() == size * (size - 1) // 2

    def test_locally_matroid(self):
        """In dimension at least two, matroid means connected with matroid vertex links."""
        rng = random.Random(103)
        checked = 0
        for _ in range(120):
            delta = independence_complex(random_simple_graph(rng, rng.randint(4, 6), density=0.3))
            if delta.dim < 2:
                continue
            checked += 1
            local = is_connected(delta) and all(is_matroid(link(delta, {v})) for v in delta.vertex_set)
            assert is_matroid(delta) == local
        assert checked > 0


class TestCovers:
    """Test cases for independence complexes and vertex covers."""

    def test_independence_complex_of_path(self):
        delta = independence_complex(SimpleGraph(3, ((1, 2), (2, 3))))
        assert delta.facets == (frozenset({1, 3}), frozenset({2}))

    def test_independence_complex_of_edgeless_graph(self):
        assert independence_complex(SimpleGraph(0, ())).facets == (frozenset(),)
        assert independence_complex(SimpleGraph(2, ())).facets == (frozenset({1, 2}),)

    def test_minimal_vertex_covers_of_path(self, threshold_path):
        covers = minimal_vertex_covers(underlying_graph(threshold_path))
        assert covers == [frozenset({1, 3}), frozenset({2, 3}), frozenset({2, 4})]

    def test_strong_vertex_covers_of_threshold_path(self, threshold_path):
        """Three minimal covers and two weighted non-minimal ones."""
        covers = strong_vertex_covers(threshold_path)
        assert [sorted(c.cover) for c in covers] == [[1, 3], [2, 3], [2, 4], [1, 3, 4], [2, 3, 4]]
        assert [c.minimal for c in covers] == [True, True, True, False, False]

    def test_cover_partition(self, threshold_path):
        """{1,3,4}: 1 leaves the cover, 4 is enclosed and fed by weighted 3."""
        cover = strong_cover(threshold_path, {1, 3, 4})
        assert cover.to_dict() == {"cover": [1, 3, 4], "l1": [1], "l2": [3], "l3": [4], "minimal": False}

    def test_non_strong_covers(self, threshold_path):
        assert strong_cover(threshold_path, {1, 2, 3, 4}) is None
        assert strong_cover(threshold_path, {1}) is None

    def test_unweighted_graph_has_only_minimal_strong_covers(self):
        from edge_ideals.graph_core import graph_from_edges
        graph = graph_from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        covers = strong_vertex_covers(graph)
        assert all(c.minimal for c in covers)
        assert [c.cover for c in covers] == minimal_vertex_covers(underlying_graph(graph))

    def test_minimal_strong_covers_have_empty_l3(self):
        from edge_ideals.graph_core import graph_from_edges
        graph = graph_from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)], [1, 2, 3, 2])
        for cover in strong_vertex_covers(graph):
            assert cover.l1 | cover.l2 | cover.l3 == cover.cover
            assert cover.minimal == (not cover.l3)


class TestWellCovered:
    """Test cases for well-covered and W2 predicates."""

    @pytest.mark.parametrize("n, edges, expected", [
        (5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)], (2, True, True)),
        (3, [(1, 2), (2, 3)], (2, False, False)),
        (3, [(1, 2), (2, 3), (1, 3)], (1, True, True)),
        (4, [(1, 2), (2, 3), (3, 4), (1, 4)], (2, True, False)),
        (2, [(1, 2)], (1, True, True)),
    ])
    def test_reports(self, n, edges, expected):
        assert well_covered_report(SimpleGraph(n, tuple(edges))) == expected

    def test_matroid_exchange(self):
        """Two disjoint edges give a matroid; the path does not."""
        assert is_matroid(independence_complex(SimpleGraph(4, ((1, 2), (3, 4)))))
        assert not is_matroid(independence_complex(SimpleGraph(3, ((1, 2), (2, 3)))))
