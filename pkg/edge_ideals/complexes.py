from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx
from loguru import logger
from more_itertools import powerset
from sympy import GF, QQ, Matrix, isprime
from sympy.polys.matrices import DomainMatrix

from edge_ideals import config
from edge_ideals.errors import CapExceededError, FieldError, NotAFaceError, VoidComplexError
from edge_ideals.graph_core import SimpleGraph, WeightedOrientedGraph, underlying_graph
from edge_ideals.models import ComplexDocument

Face = FrozenSet[int]


def face_key(face: Iterable[int]) -> Tuple[int, Tuple[int, ...]]:
    ordered = tuple(sorted(face))
    return len(ordered), ordered


def check_ambient(n: int):
    if n > config.MAX_AMBIENT_VERTICES:
        raise CapExceededError(f"{n} ambient vertices exceed the cap of {config.MAX_AMBIENT_VERTICES}")


@dataclass(frozen=True)
class CoefficientField:
    """Coefficient field for homology: characteristic 0 is QQ, otherwise GF(p)"""
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise FieldError(f"{self.characteristic} is not prime")

    @classmethod
    def parse(cls, text: str) -> "CoefficientField":
        value = text.strip().lower()
        if value in ("q", "qq"):
            return cls(0)
        if value.startswith("gf:"):
            try:
                return cls(int(value[3:]))
            except ValueError as e:
                raise FieldError(f"invalid field `{text}`") from e
        raise FieldError(f"invalid field `{text}`, expected q or gf:<p>")

    @property
    def name(self) -> str:
        return "q" if self.characteristic == 0 else f"gf:{self.characteristic}"

    @property
    def domain(self):
        return QQ if self.characteristic == 0 else GF(self.characteristic)


RATIONALS = CoefficientField(0)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Simplicial complex on vertices 1..n stored by its facets.

    The void complex has no faces at all; the empty complex {∅} has the single
    facet frozenset(). Facets are maximalized and sorted on construction.
    """
    n: int
    facets: Tuple[Face, ...]
    void: bool = False

    def __post_init__(self):
        if self.void:
            if self.facets:
                raise ValueError("the void complex has no facets")
            return
        candidates = {frozenset(f) for f in self.facets} or {frozenset()}
        for f in candidates:
            if any(not 1 <= v <= self.n for v in f):
                raise ValueError(f"facet {sorted(f)} is outside 1..{self.n}")
        maximal = [f for f in candidates if not any(f < g for g in candidates)]
        object.__setattr__(self, "facets", tuple(sorted(maximal, key=lambda f: tuple(sorted(f)))))

    @classmethod
    def void_complex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (), void=True)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        return cls(n, (frozenset(range(1, n + 1)),))

    @property
    def dim(self) -> int:
        if self.void:
            return -1
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        """All faces in (size, lexicographic) order"""
        if self.void:
            return ()
        check_ambient(max(len(f) for f in self.facets))
        found = {frozenset(s) for f in self.facets for s in powerset(sorted(f))}
        return tuple(sorted(found, key=face_key))

    @cached_property
    def face_set(self) -> FrozenSet[Face]:
        return frozenset(self.faces)

    @property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(v for f in self.facets for v in f)

    def is_face(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return not self.void and any(s <= f for f in self.facets)

    def is_pure(self) -> bool:
        return self.void or len({len(f) for f in self.facets}) == 1

    def to_document(self) -> ComplexDocument:
        if self.void:
            return ComplexDocument(n=self.n, void=True)
        return ComplexDocument(n=self.n, facets=[sorted(f) for f in self.facets])

    def to_dict(self) -> Dict[str, object]:
        return self.to_document().model_dump(exclude_none=True)


@dataclass(frozen=True)
class StrongCover:
    cover: Face
    l1: Face
    l2: Face
    l3: Face
    minimal: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "cover": sorted(self.cover),
            "l1": sorted(self.l1),
            "l2": sorted(self.l2),
            "l3": sorted(self.l3),
            "minimal": self.minimal,
        }


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology ranks, ranks[0] being H̃_{-1}"""
    ranks: Tuple[int, ...]
    field: CoefficientField

    def rank(self, i: int) -> int:
        index = i + 1
        return self.ranks[index] if 0 <= index < len(self.ranks) else 0

    def is_zero(self) -> bool:
        return not any(self.ranks)


def _maximal_independent_sets(graph: nx.Graph) -> List[Face]:
    if graph.number_of_nodes() == 0:
        return [frozenset()]
    return [frozenset(clique) for clique in nx.find_cliques(nx.complement(graph))]


def independence_complex(graph: SimpleGraph) -> SimplicialComplex:
    return SimplicialComplex(graph.n, tuple(_maximal_independent_sets(graph.to_networkx())))


def minimal_vertex_covers(graph: SimpleGraph) -> List[Face]:
    everything = frozenset(graph.vertices)
    covers = [everything - f for f in independence_complex(graph).facets]
    return sorted(covers, key=face_key)


def cover_partition(graph: WeightedOrientedGraph, cover: Iterable[int]) -> Tuple[Face, Face, Face]:
    """The L1/L2/L3 split of a vertex cover"""
    c = frozenset(cover)
    simple = underlying_graph(graph)
    l1 = frozenset(x for x in c if graph.out_neighbors(x) - c)
    l3 = frozenset(x for x in c if simple.neighbors(x) <= c)
    return l1, c - l1 - l3, l3


def is_vertex_cover(graph: WeightedOrientedGraph, cover: Iterable[int]) -> bool:
    c = set(cover)
    return all(u in c or v in c for u, v in graph.edges)


def strong_cover(graph: WeightedOrientedGraph, cover: Iterable[int]):
    """The StrongCover for ``cover``, or None when it is not a strong vertex cover"""
    c = frozenset(cover)
    if not is_vertex_cover(graph, c):
        return None
    l1, l2, l3 = cover_partition(graph, c)
    heavy = frozenset(y for y in l2 | l3 if graph.weight(y) >= 2)
    for x in l3:
        if not graph.in_neighbors(x) & heavy:
            return None
    return StrongCover(c, l1, l2, l3, minimal=not l3)


def strong_vertex_covers(graph: WeightedOrientedGraph) -> List[StrongCover]:
    check_ambient(graph.n)
    found = []
    for mask in range(1 << graph.n):
        subset = [v for v in graph.vertices if mask >> (v - 1) & 1]
        candidate = strong_cover(graph, subset)
        if candidate is not None:
            found.append(candidate)
    logger.debug(f"{len(found)} strong vertex covers on {graph.n} vertices")
    return sorted(found, key=lambda c: face_key(c.cover))


def link(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    f = frozenset(face)
    if not complex_.is_face(f):
        raise NotAFaceError(f"{sorted(f)} is not a face")
    return SimplicialComplex(complex_.n, tuple(g - f for g in complex_.facets if f <= g))


def is_matroid(complex_: SimplicialComplex) -> bool:
    """Exchange property over all pairs of faces"""
    faces = complex_.faces
    members = complex_.face_set
    for big in faces:
        for small in faces:
            if len(big) <= len(small):
                continue
            if not any(small | {x} in members for x in big - small):
                return False
    return True


def is_connected(complex_: SimplicialComplex) -> bool:
    vertices = complex_.vertex_set
    if len(vertices) <= 1:
        return True
    skeleton = nx.Graph()
    skeleton.add_nodes_from(vertices)
    for f in complex_.facets:
        ordered = sorted(f)
        skeleton.add_edges_from(zip(ordered, ordered[1:]))
    return nx.is_connected(skeleton)


def well_covered_report(graph: SimpleGraph) -> Tuple[int, bool, bool]:
    """(alpha, well_covered, in_W2)"""
    g = graph.to_networkx()
    sizes = {len(s) for s in _maximal_independent_sets(g)}
    alpha = max(sizes)
    well_covered = len(sizes) == 1
    in_w2 = well_covered
    for v in graph.vertices:
        if not in_w2:
            break
        rest = g.copy()
        rest.remove_node(v)
        rest_sizes = {len(s) for s in _maximal_independent_sets(rest)}
        in_w2 = rest_sizes == {alpha}
    return alpha, well_covered, in_w2


def _rank(rows: List[List[int]], field: CoefficientField) -> int:
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(field.domain).rank()


@lru_cache(maxsize=4096)
def homology_ranks(complex_: SimplicialComplex, field: CoefficientField = RATIONALS) -> HomologyProfile:
    """Reduced homology ranks from exact boundary-matrix ranks over ``field``"""
    if complex_.void:
        return HomologyProfile((0,), field)
    top = complex_.dim
    by_dim: List[List[Face]] = [[] for _ in range(top + 2)]
    for f in complex_.faces:
        by_dim[len(f)].append(f)
    index = [{f: i for i, f in enumerate(level)} for level in by_dim]

    # boundary_ranks[k] is the rank of the map from k-faces to (k-1)-faces, k = 0..top
    boundary_ranks = []
    for k in range(top + 1):
        rows = [[0] * len(by_dim[k + 1]) for _ in by_dim[k]]
        for col, f in enumerate(by_dim[k + 1]):
            for i, v in enumerate(sorted(f)):
                rows[index[k][f - {v}]][col] = -1 if i % 2 else 1
        boundary_ranks.append(_rank(rows, field))

    ranks = []
    for k in range(-1, top + 1):
        incoming = boundary_ranks[k + 1] if k + 1 <= top else 0
        outgoing = boundary_ranks[k] if k >= 0 else 0
        ranks.append(len(by_dim[k + 1]) - outgoing - incoming)
    return HomologyProfile(tuple(ranks), field)


def reisner_cm(complex_: SimplicialComplex, field: CoefficientField = RATIONALS) -> bool:
    if complex_.void:
        return True
    for face in complex_.faces:
        lk = link(complex_, face)
        profile = homology_ranks(lk, field)
        if any(profile.rank(i) for i in range(-1, lk.dim)):
            return False
    return True


def sr_depth(complex_: SimplicialComplex, field: CoefficientField = RATIONALS) -> int:
    """Depth of the Stanley-Reisner ring from link homology"""
    if complex_.void:
        raise VoidComplexError("depth of the void complex is undefined")
    best = None
    for face in complex_.faces:
        profile = homology_ranks(link(complex_, face), field)
        for i in range(-1, len(profile.ranks) - 1):
            if profile.rank(i):
                candidate = len(face) + 1 + i
                best = candidate if best is None else min(best, candidate)
                break
    return best
