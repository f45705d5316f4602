#!/usr/bin/env python3
"""
Cohen-Macaulay toolkit for edge ideals of weighted oriented graphs

This tool supports exact experiments with weighted oriented edge ideals by:
1. Building edge ideals, strong vertex covers, primary decompositions and powers
2. Deciding equality of ordinary and symbolic powers and Cohen-Macaulayness
   structurally, with an independent homological oracle next to it
3. Sweeping graph corpora to cross-validate the two

Usage:
    python cm_toolkit.py analyze graph.json
    python cm_toolkit.py cm graph.json --t 2 --verify
    python cm_toolkit.py family --k 2 --scan-to 4
    python cm_toolkit.py sweep corpus/sweep_corpus.yml --workers 4
"""

import argparse
import asyncio
import hashlib
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import ValidationError

from edge_ideals import config
from edge_ideals.cm_engine import betti_table, is_cm
from edge_ideals.complexes import (
    CoefficientField,
    independence_complex,
    minimal_vertex_covers,
    strong_vertex_covers,
    well_covered_report,
)
from edge_ideals.errors import DisagreementError, EdgeIdealError
from edge_ideals.graph_core import (
    WeightedOrientedGraph,
    parse_graph,
    remove_isolated,
    structure_report,
    to_document,
    underlying_graph,
)
from edge_ideals.ideals import (
    associated_primes,
    edge_ideal,
    equals,
    intersect_all,
    is_subset,
    krull_dim,
    minimal_primes,
    power,
    primary_decomposition,
    radical,
    symbolic_power,
)
from edge_ideals.models import RunConfig
from edge_ideals.theorems import family_scan, ordinary_cm, powers_equal, symbolic_cm_all_t, symbolic_power_contains_ideal
from sweeps.instance_generator import InstanceGenerator
from sweeps.sweep_runner import SweepRunner

DEFAULT_CORPUS = Path(__file__).parent / "corpus" / "sweep_corpus.yml"

# Checks attached to seeded random sweep instances
RANDOM_CHECKS = (("equal", 2), ("equal", 3))


class CMToolkit:
    """
    Runs one toolkit command against a parsed graph.

    Every command returns a plain dict with a fixed key order, so identical
    inputs give identical reports.
    """

    def __init__(self, run_config: RunConfig):
        self.config = run_config
        self.field = CoefficientField.parse(run_config.field)
        self.bundle_dir = Path(run_config.bundle_dir)
        logger.debug(f"Toolkit ready for `{run_config.command}` over {self.field.name}")

    def analyze(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        simple = underlying_graph(graph)
        ideal = edge_ideal(graph)
        alpha, well_covered, in_w2 = well_covered_report(simple)
        return {
            "graph": to_document(graph).model_dump(),
            "notices": list(graph.notices),
            "structure": structure_report(graph).to_dict(),
            "independence_number": alpha,
            "well_covered": well_covered,
            "in_w2": in_w2,
            "in_w2_without_isolated": well_covered_report(remove_isolated(simple))[2],
            "independence_complex": independence_complex(simple).to_dict(),
            "minimal_vertex_covers": [sorted(c) for c in minimal_vertex_covers(simple)],
            "strong_vertex_covers": [c.to_dict() for c in strong_vertex_covers(graph)],
            "edge_ideal": ideal.to_dict(),
            "radical": radical(ideal).to_dict(),
            "krull_dim": krull_dim(ideal),
        }

    def decompose(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        ideal = edge_ideal(graph)
        covers = strong_vertex_covers(graph)
        components = primary_decomposition(graph)
        proper = not ideal.is_zero
        return {
            "components": [
                {"cover": sorted(c.cover), "minimal": c.minimal, "ideal": component.to_dict()}
                for c, component in zip(covers, components)
            ],
            "reproduces_ideal": equals(intersect_all(graph.n, components), ideal),
            "minimal_primes": [sorted(p) for p in minimal_primes(ideal)],
            "associated_primes": [sorted(p) for p in associated_primes(ideal, self.config.max_box)] if proper else [],
            "first_symbolic_power": symbolic_power(graph, 1).to_dict(),
            "containment": symbolic_power_contains_ideal(graph),
        }

    def power(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        return {"t": self.config.t, "ideal": power(edge_ideal(graph), self.config.t).to_dict()}

    def symbolic(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        t = self.config.t
        symbolic = symbolic_power(graph, t)
        return {
            "t": t,
            "ideal": symbolic.to_dict(),
            "contains_power": is_subset(power(edge_ideal(graph), t), symbolic),
        }

    def equality(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        # equality reports always carry the direct verdict and its witness
        verdict = powers_equal(graph, self.config.t, verify=True)
        return verdict.to_document().model_dump(exclude_none=True)

    def _oracle(self, ideal):
        method = "both" if self.config.verify else "betti"
        return is_cm(ideal, self.field, method=method, lemma=self.config.verify,
                     max_box=self.config.max_box, max_lattice=self.config.max_lattice)

    def cm(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        t = self.config.t
        symbolic_report = self._oracle(symbolic_power(graph, t))
        ordinary_report = self._oracle(power(edge_ideal(graph), t))
        verify_up_to = t if self.config.verify else 0
        symbolic_verdict = symbolic_cm_all_t(graph, verify_up_to, self.field)
        ordinary_verdict = ordinary_cm(graph, t, verify=self.config.verify, field=self.field)
        return {
            "t": t,
            "cm_symbolic": symbolic_report.cm,
            "cm_ordinary": ordinary_report.cm,
            "symbolic_report": symbolic_report.to_dict(),
            "ordinary_report": ordinary_report.to_dict(),
            "symbolic_theorem": symbolic_verdict.to_document().model_dump(exclude_none=True),
            "ordinary_theorem": ordinary_verdict.to_document().model_dump(exclude_none=True),
        }

    def betti(self, graph: WeightedOrientedGraph) -> Dict[str, Any]:
        t = self.config.t
        ideal = power(edge_ideal(graph), t)
        table = betti_table(ideal, self.field, self.config.max_lattice)
        dim = krull_dim(ideal)
        return {
            "t": t,
            "field": self.field.name,
            "ideal": ideal.to_dict(),
            "betti": table.to_list(),
            "pd": table.pd,
            "depth": graph.n - table.pd,
            "dim": dim,
            "cm": graph.n - table.pd == dim,
        }

    def family(self) -> Dict[str, Any]:
        return family_scan(self.config.k, self.config.scan_to, self.field)

    def sweep_instances(self) -> List:
        generator = InstanceGenerator()
        instances = []
        corpus_path = self.config.input_path
        if corpus_path is None and not (self.config.exhaustive or self.config.count):
            corpus_path = str(DEFAULT_CORPUS)
        if corpus_path:
            instances.extend(generator.load_corpus(corpus_path))
        if self.config.exhaustive:
            instances.extend(generator.exhaustive(self.config.exhaustive))
        if self.config.count:
            seed = self.config.seed if self.config.seed is not None else 0
            instances.extend(generator.random_instances(self.config.count, self.config.random_n, seed, RANDOM_CHECKS))
        return instances

    async def sweep(self) -> Dict[str, Any]:
        runner = SweepRunner(
            field=self.field.name,
            scan_to=self.config.scan_to,
            workers=self.config.workers,
            output_dir=self.config.output_dir,
            bundle_dir=self.config.bundle_dir,
        )
        return await runner.run_sweep(self.sweep_instances())

    def dispatch(self, graph: Optional[WeightedOrientedGraph]) -> Dict[str, Any]:
        command = self.config.command
        logger.info(f"Running `{command}`")
        if command == "family":
            return self.family()
        if command == "sweep":
            return asyncio.run(self.sweep())
        return getattr(self, command)(graph)

    def write_bundle(self, error: DisagreementError, graph: Optional[WeightedOrientedGraph]) -> str:
        """Write the counterexample bundle of a disagreement and return its path"""
        bundle = {"command": self.config.command, "t": self.config.t, "message": str(error),
                  **(error.bundle or {})}
        if graph is not None and "graph" not in bundle:
            bundle["graph"] = to_document(graph).model_dump()
        text = json.dumps(bundle, indent=2, sort_keys=True, default=str)
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]
        self.bundle_dir.mkdir(parents=True, exist_ok=True)
        path = self.bundle_dir / f"{self.config.command}_{digest}.json"
        path.write_text(text, encoding="utf-8")
        logger.error(f"Counterexample bundle written to {path}")
        return str(path)


def read_graph_document(input_path: str) -> str:
    if input_path == "-":
        return sys.stdin.read()
    return Path(input_path).read_text(encoding="utf-8")


def run(run_config: RunConfig, graph_document: Optional[str] = None) -> Dict[str, Any]:
    """Run one command and return its report; errors propagate to the caller"""
    toolkit = CMToolkit(run_config)
    graph = parse_graph(graph_document) if graph_document is not None else None
    report = toolkit.dispatch(graph)
    return {"schema_version": config.SCHEMA_VERSION, "command": run_config.command, **report}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Cohen-Macaulay toolkit for weighted oriented edge ideals')
    parser.add_argument('command', choices=['analyze', 'decompose', 'power', 'symbolic', 'equality',
                                            'cm', 'betti', 'family', 'sweep'],
                        help='Toolkit command')
    parser.add_argument('input', nargs='?', default=None,
                        help="Graph JSON file or '-' for standard input; a YAML corpus for sweep")
    parser.add_argument('--t', type=int, default=1, help='Power index')
    parser.add_argument('--field', type=str, default='q', help="Coefficient field: 'q' or 'gf:<p>'")
    parser.add_argument('--verify', action='store_true', help='Run the brute-force oracle next to the structural test')
    parser.add_argument('--k', type=int, default=2, help='Threshold family parameter')
    parser.add_argument('--scan-to', type=int, default=4, help='Largest t scanned')
    parser.add_argument('--max-box', type=int, default=config.MAX_BOX_POINTS, help='Colon-method box cap')
    parser.add_argument('--max-lattice', type=int, default=config.MAX_LATTICE_POINTS, help='lcm-lattice cap')
    parser.add_argument('--seed', type=int, help='Seed for random sweep instances')
    parser.add_argument('--count', type=int, default=0, help='Number of random sweep instances')
    parser.add_argument('--random-n', type=int, default=5, help='Vertex count of random sweep instances')
    parser.add_argument('--exhaustive', type=int, default=0,
                        help='Add every connected graph up to this many vertices to the sweep')
    parser.add_argument('--workers', type=int, default=1, help='Sweep worker pool size')
    parser.add_argument('--bundle-dir', type=str, default='counterexamples', help='Directory for counterexample bundles')
    parser.add_argument('--output-dir', type=str, help='Directory for sweep result files')
    parser.add_argument('--verbose', action='store_true', help='Log at DEBUG level')
    return parser


def configure_logging(verbose: bool = False):
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "INFO")


def _report_error(error: Exception, name: Optional[str] = None):
    print(json.dumps({"error": name or type(error).__name__, "message": str(error)}), file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        run_config = RunConfig(
            command=args.command,
            input_path=args.input,
            t=args.t,
            field=args.field,
            verify=args.verify,
            k=args.k,
            scan_to=args.scan_to,
            max_box=args.max_box,
            max_lattice=args.max_lattice,
            seed=args.seed,
            count=args.count,
            random_n=args.random_n,
            exhaustive=args.exhaustive,
            workers=args.workers,
            bundle_dir=args.bundle_dir,
            output_dir=args.output_dir,
        )
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e.error_count()} problem(s)")
        _report_error(e, "InvalidParameterError")
        return 1

    graph_document = None
    try:
        if run_config.command not in ("family", "sweep"):
            graph_document = read_graph_document(run_config.input_path)
        report = run(run_config, graph_document)
    except DisagreementError as e:
        graph = parse_graph(graph_document) if graph_document is not None else None
        path = CMToolkit(run_config).write_bundle(e, graph)
        print(json.dumps({"error": "DisagreementError", "message": str(e), "bundle": path}), file=sys.stderr)
        return 2
    except EdgeIdealError as e:
        logger.error(f"{type(e).__name__}: {e}")
        _report_error(e)
        return 1
    except OSError as e:
        logger.error(f"Cannot read input: {e}")
        _report_error(e, "MalformedGraphError")
        return 1

    print(json.dumps(report, indent=2))
    if run_config.command == "sweep" and report["metrics"]["disagreements"]:
        return 2
    logger.success(f"`{run_config.command}` finished")
    return 0


if __name__ == '__main__':
    sys.exit(main())
