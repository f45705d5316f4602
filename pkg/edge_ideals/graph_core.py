import json
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx
from loguru import logger
from pydantic import ValidationError

from edge_ideals import config
from edge_ideals.errors import (
    DuplicateEdgeError,
    LoopEdgeError,
    MalformedGraphError,
    NotIndependentError,
    VertexRangeError,
    WeightError,
)
from edge_ideals.models import GraphDocument

Edge = Tuple[int, int]


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """
    Directed simple graph on vertices 1..n with a positive integer weight per vertex.

    Edges are kept sorted; at most one orientation of every undirected edge is allowed.
    ``label_map`` records the original vertex labels after relabeling by
    ``induced_subgraph`` and ``notices`` the repairs made while parsing.
    """
    n: int
    edges: Tuple[Edge, ...]
    weights: Tuple[int, ...]
    label_map: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    notices: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise MalformedGraphError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.weights) != self.n:
            raise MalformedGraphError(f"expected {self.n} weights, got {len(self.weights)}")
        for v, w in enumerate(self.weights, start=1):
            if w < 1:
                raise WeightError(f"weight of vertex {v} must be positive, got {w}")
            if w >= config.EXPONENT_LIMIT:
                raise WeightError(f"weight of vertex {v} exceeds {config.EXPONENT_LIMIT - 1}")

        seen: Dict[FrozenSet[int], Edge] = {}
        for u, v in self.edges:
            for x in (u, v):
                if not 1 <= x <= self.n:
                    raise VertexRangeError(f"vertex {x} of edge ({u},{v}) is outside 1..{self.n}")
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdgeError(f"edge ({u},{v}) duplicates {seen[key]}")
            seen[key] = (u, v)

        object.__setattr__(self, "edges", tuple(sorted((int(u), int(v)) for u, v in self.edges)))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def weight(self, v: int) -> int:
        self._check_vertex(v)
        return self.weights[v - 1]

    def out_neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return frozenset(b for a, b in self.edges if a == v)

    def in_neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return frozenset(a for a, b in self.edges if b == v)

    @property
    def sinks(self) -> FrozenSet[int]:
        """Vertices without outgoing edges; isolated vertices included"""
        tails = {a for a, _ in self.edges}
        return frozenset(v for v in self.vertices if v not in tails)

    @property
    def sources(self) -> FrozenSet[int]:
        """Vertices with outgoing edges and no incoming ones"""
        tails = {a for a, _ in self.edges}
        heads = {b for _, b in self.edges}
        return frozenset(tails - heads)

    @property
    def v_plus(self) -> FrozenSet[int]:
        return frozenset(v for v in self.vertices if self.weights[v - 1] >= 2)

    def original_label(self, v: int) -> int:
        return self.label_map[v - 1] if self.label_map else v

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise VertexRangeError(f"vertex {v} is outside 1..{self.n}")


@dataclass(frozen=True)
class SimpleGraph:
    """Simple undirected graph on vertices 1..n"""
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        normalized = sorted({(min(u, v), max(u, v)) for u, v in self.edges})
        for u, v in normalized:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if u < 1 or v > self.n:
                raise VertexRangeError(f"edge ({u},{v}) is outside 1..{self.n}")
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def neighbors(self, v: int) -> FrozenSet[int]:
        return frozenset([b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v])

    @property
    def isolated(self) -> FrozenSet[int]:
        touched = {x for e in self.edges for x in e}
        return frozenset(v for v in self.vertices if v not in touched)

    def is_independent(self, vertex_set: Iterable[int]) -> bool:
        s = set(vertex_set)
        return not any(u in s and v in s for u, v in self.edges)


class Neighborhoods(NamedTuple):
    outgoing: FrozenSet[int]
    incoming: FrozenSet[int]
    open: FrozenSet[int]
    closed: FrozenSet[int]


@dataclass(frozen=True)
class ComponentShape:
    """One non-trivial connected component: `clique`, `edge` (a K2) or `other`"""
    kind: str
    vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "size": self.size, "vertices": list(self.vertices)}


@dataclass(frozen=True)
class StructureReport:
    sinks: Tuple[int, ...]
    sources: Tuple[int, ...]
    v_plus: Tuple[int, ...]
    odd_girth: float
    triangle_free: bool
    isolated: Tuple[int, ...]
    component_shapes: Tuple[ComponentShape, ...]
    all_v_plus_sink: bool
    disjoint_cliques: bool
    disjoint_edges: bool
    disjoint_edges_strict: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "sinks": list(self.sinks),
            "sources": list(self.sources),
            "v_plus": list(self.v_plus),
            "odd_girth": None if math.isinf(self.odd_girth) else int(self.odd_girth),
            "triangle_free": self.triangle_free,
            "isolated": list(self.isolated),
            "component_shapes": [shape.to_dict() for shape in self.component_shapes],
            "all_v_plus_sink": self.all_v_plus_sink,
            "disjoint_cliques": self.disjoint_cliques,
            "disjoint_edges": self.disjoint_edges,
            "disjoint_edges_strict": self.disjoint_edges_strict,
        }


def normalize_source_weights(graph: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """Set the weight of every source vertex to 1, recording one notice per repair"""
    weights = list(graph.weights)
    notices = list(graph.notices)
    for v in sorted(graph.sources):
        if weights[v - 1] != 1:
            notice = f"source vertex {v} weight normalized {weights[v - 1]}->1"
            logger.warning(notice)
            notices.append(notice)
            weights[v - 1] = 1
    if weights == list(graph.weights):
        return graph
    return WeightedOrientedGraph(graph.n, graph.edges, tuple(weights), graph.label_map, tuple(notices))


def parse_graph(text: Union[str, bytes]) -> WeightedOrientedGraph:
    """Parse a graph JSON document and normalize source weights"""
    try:
        document = GraphDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise MalformedGraphError(f"graph document is not valid JSON: {e}") from e
    except ValidationError as e:
        raise MalformedGraphError(f"graph document does not match the schema: {e.errors()[0]['msg']}") from e
    graph = from_document(document)
    logger.debug(f"Parsed graph with {graph.n} vertices and {len(graph.edges)} edges")
    return graph


def from_document(document: GraphDocument) -> WeightedOrientedGraph:
    graph = WeightedOrientedGraph(document.n, tuple(tuple(e) for e in document.edges), tuple(document.weights))
    return normalize_source_weights(graph)


def to_document(graph: WeightedOrientedGraph) -> GraphDocument:
    return GraphDocument(n=graph.n, edges=[list(e) for e in graph.edges], weights=list(graph.weights))


def serialize_graph(graph: WeightedOrientedGraph) -> str:
    return to_document(graph).model_dump_json()


def underlying_graph(graph: WeightedOrientedGraph) -> SimpleGraph:
    return SimpleGraph(graph.n, graph.edges)


def neighborhoods(graph: WeightedOrientedGraph, v: int) -> Neighborhoods:
    outgoing = graph.out_neighbors(v)
    incoming = graph.in_neighbors(v)
    open_set = outgoing | incoming
    return Neighborhoods(outgoing, incoming, open_set, open_set | {v})


def odd_girth(graph: SimpleGraph) -> float:
    """Length of the shortest odd cycle, math.inf for bipartite graphs"""
    g = graph.to_networkx()
    best = math.inf
    for source in graph.vertices:
        level = nx.single_source_shortest_path_length(g, source)
        for u, v in graph.edges:
            if u in level and v in level and level[u] == level[v]:
                best = min(best, 2 * level[u] + 1)
    return best


def component_shapes(graph: SimpleGraph) -> List[ComponentShape]:
    g = graph.to_networkx()
    shapes = []
    for component in nx.connected_components(g):
        if len(component) < 2:
            continue
        vertices = tuple(sorted(component))
        size = len(vertices)
        edge_count = g.subgraph(component).number_of_edges()
        if size == 2:
            kind = "edge"
        elif edge_count == size * (size - 1) // 2:
            kind = "clique"
        else:
            kind = "other"
        shapes.append(ComponentShape(kind, vertices))
    return sorted(shapes, key=lambda s: s.vertices)


def structure_report(graph: WeightedOrientedGraph) -> StructureReport:
    simple = underlying_graph(graph)
    shapes = component_shapes(simple)
    girth = odd_girth(simple)
    sinks = graph.sinks
    disjoint_edges = all(shape.kind == "edge" for shape in shapes)
    return StructureReport(
        sinks=tuple(sorted(sinks)),
        sources=tuple(sorted(graph.sources)),
        v_plus=tuple(sorted(graph.v_plus)),
        odd_girth=girth,
        triangle_free=girth > 3,
        isolated=tuple(sorted(simple.isolated)),
        component_shapes=tuple(shapes),
        all_v_plus_sink=graph.v_plus <= sinks,
        # an isolated vertex is a K1
        disjoint_cliques=all(shape.kind != "other" for shape in shapes),
        disjoint_edges=disjoint_edges,
        disjoint_edges_strict=disjoint_edges and not simple.isolated,
    )


def induced_subgraph(graph: WeightedOrientedGraph, vertex_set: Iterable[int]) -> WeightedOrientedGraph:
    """Restrict to ``vertex_set`` and relabel it to 1..|S| in increasing order; weights are inherited"""
    kept = sorted(set(vertex_set))
    for v in kept:
        graph._check_vertex(v)
    index = {v: i for i, v in enumerate(kept, start=1)}
    edges = tuple((index[u], index[v]) for u, v in graph.edges if u in index and v in index)
    weights = tuple(graph.weights[v - 1] for v in kept)
    labels = tuple(graph.original_label(v) for v in kept)
    return WeightedOrientedGraph(len(kept), edges, weights, label_map=labels)


def localization_graph(graph: WeightedOrientedGraph, vertex_set: Iterable[int]) -> WeightedOrientedGraph:
    """The induced subgraph on V minus the closed neighborhood of an independent set"""
    s = set(vertex_set)
    simple = underlying_graph(graph)
    for v in s:
        graph._check_vertex(v)
    if not simple.is_independent(s):
        raise NotIndependentError(f"vertex set {sorted(s)} is not independent")
    removed = set(s)
    for v in s:
        removed |= simple.neighbors(v)
    return induced_subgraph(graph, [v for v in graph.vertices if v not in removed])


def remove_isolated(graph: SimpleGraph) -> SimpleGraph:
    kept = [v for v in graph.vertices if v not in graph.isolated]
    index = {v: i for i, v in enumerate(kept, start=1)}
    return SimpleGraph(len(kept), tuple((index[u], index[v]) for u, v in graph.edges))


def graph_from_edges(n: int, edges: Sequence[Edge], weights: Optional[Sequence[int]] = None) -> WeightedOrientedGraph:
    """Build a validated, source-normalized graph from Python values"""
    graph = WeightedOrientedGraph(n, tuple(tuple(e) for e in edges), tuple(weights or [1] * n))
    return normalize_source_weights(graph)
