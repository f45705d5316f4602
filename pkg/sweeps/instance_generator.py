#!/usr/bin/env python3
"""
Instance generator for the theorem validation sweeps.

Produces weighted oriented graphs three ways: exhaustively over small
connected underlying graphs, from a seeded random model, and from a YAML
corpus file. Source vertices always carry weight 1.
"""

import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import yaml
from loguru import logger
from pydantic import ValidationError

from edge_ideals.errors import MalformedGraphError
from edge_ideals.graph_core import WeightedOrientedGraph, from_document, graph_from_edges
from edge_ideals.models import GraphDocument

Check = Tuple[str, int]

DEFAULT_CHECKS: Tuple[Check, ...] = (("equal", 2), ("cmPower2", 2))


@dataclass(frozen=True)
class SweepInstance:
    instance_id: str
    graph: WeightedOrientedGraph
    checks: Tuple[Check, ...] = field(default=DEFAULT_CHECKS)
    origin: str = "exhaustive"


class InstanceGenerator:
    """
    Generates sweep instances.

    The connected graphs table lists one representative of every connected
    simple graph on at most four vertices.
    """

    def __init__(self, weight_values: Sequence[int] = (1, 2)):
        self.weight_values = tuple(weight_values)
        self.connected_graphs: Dict[str, Tuple[int, Tuple[Tuple[int, int], ...]]] = {
            "K1": (1, ()),
            "K2": (2, ((1, 2),)),
            "P3": (3, ((1, 2), (2, 3))),
            "K3": (3, ((1, 2), (2, 3), (1, 3))),
            "P4": (4, ((1, 2), (2, 3), (3, 4))),
            "star": (4, ((1, 2), (1, 3), (1, 4))),
            "C4": (4, ((1, 2), (2, 3), (3, 4), (1, 4))),
            "paw": (4, ((1, 2), (2, 3), (1, 3), (3, 4))),
            "diamond": (4, ((1, 2), (2, 3), (1, 3), (2, 4), (3, 4))),
            "K4": (4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))),
        }

    def orientations(self, edges: Sequence[Tuple[int, int]]) -> Iterable[Tuple[Tuple[int, int], ...]]:
        for flips in itertools.product((False, True), repeat=len(edges)):
            yield tuple((v, u) if flip else (u, v) for (u, v), flip in zip(edges, flips))

    def weighted_orientations(self, n: int, edges: Sequence[Tuple[int, int]],
                              weight_values: Optional[Sequence[int]] = None) -> List[WeightedOrientedGraph]:
        """Every orientation and weighting of the non-source vertices"""
        values = tuple(weight_values or self.weight_values)
        graphs = []
        for oriented in self.orientations(edges):
            sources = WeightedOrientedGraph(n, oriented, (1,) * n).sources
            choices = [(1,) if v in sources else values for v in range(1, n + 1)]
            graphs.extend(WeightedOrientedGraph(n, oriented, weights) for weights in itertools.product(*choices))
        return graphs

    def exhaustive(self, max_vertices: int = 4, checks: Sequence[Check] = DEFAULT_CHECKS,
                   names: Optional[Sequence[str]] = None) -> List[SweepInstance]:
        instances = []
        for name, (n, edges) in self.connected_graphs.items():
            if n > max_vertices or (names and name not in names):
                continue
            for i, graph in enumerate(self.weighted_orientations(n, edges)):
                instances.append(SweepInstance(f"{name}_{i:04d}", graph, tuple(checks), "exhaustive"))
        logger.info(f"Generated {len(instances)} exhaustive instances on at most {max_vertices} vertices")
        return instances

    def random_graph(self, rng: random.Random, n: int, edge_probability: float = 0.5,
                     max_weight: int = 2) -> WeightedOrientedGraph:
        edges = []
        for u, v in itertools.combinations(range(1, n + 1), 2):
            if rng.random() < edge_probability:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
        sources = WeightedOrientedGraph(n, tuple(edges), (1,) * n).sources
        weights = [1 if v in sources else rng.randint(1, max_weight) for v in range(1, n + 1)]
        return graph_from_edges(n, edges, weights)

    def random_instances(self, count: int, n: int, seed: int, checks: Sequence[Check] = DEFAULT_CHECKS,
                         edge_probability: float = 0.5, max_weight: int = 2) -> List[SweepInstance]:
        rng = random.Random(seed)
        instances = [
            SweepInstance(f"random_{seed}_{i:04d}", self.random_graph(rng, n, edge_probability, max_weight),
                          tuple(checks), "random")
            for i in range(count)
        ]
        logger.info(f"Generated {count} random instances on {n} vertices with seed {seed}")
        return instances

    def load_corpus(self, corpus_path: str) -> List[SweepInstance]:
        """
        Load instances from a YAML corpus.

        Each entry has an `id`, the graph fields `n`, `edges`, `weights` and an
        optional `checks` list of `{theorem, t}` items.
        """
        path = Path(corpus_path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                entries = yaml.safe_load(f) or []
        except yaml.YAMLError as e:
            raise MalformedGraphError(f"corpus {path} is not valid YAML: {e}") from e

        instances = []
        for index, entry in enumerate(entries):
            instance_id = str(entry.get("id", f"corpus_{index:04d}"))
            try:
                document = GraphDocument(n=entry["n"], edges=entry.get("edges", []), weights=entry.get("weights", []))
            except (KeyError, ValidationError) as e:
                raise MalformedGraphError(f"corpus entry {instance_id} is malformed: {e}") from e
            checks = tuple((c["theorem"], int(c.get("t", 2))) for c in entry.get("checks", [])) or DEFAULT_CHECKS
            instances.append(SweepInstance(instance_id, from_document(document), checks, "corpus"))
        logger.info(f"Loaded {len(instances)} corpus instances from {path}")
        return instances
