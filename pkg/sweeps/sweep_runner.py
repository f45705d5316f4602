#!/usr/bin/env python3
"""
Sweep runner for the theorem validation framework.

Runs every requested theorem check on every instance, comparing the
structural verdict with the brute-force oracle, and writes results,
metrics, a per-theorem summary table, a text report and one bundle per
disagreement.
"""

import asyncio
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional

from loguru import logger

from edge_ideals import config
from edge_ideals.cm_engine import depth
from edge_ideals.complexes import CoefficientField
from edge_ideals.errors import DisagreementError, EdgeIdealError, InvalidParameterError
from edge_ideals.graph_core import WeightedOrientedGraph, to_document
from edge_ideals.ideals import edge_ideal, member, power, symbolic_power
from edge_ideals.theorems import ordinary_cm, powers_equal, symbolic_cm_all_t
from sweeps.instance_generator import SweepInstance
from sweeps.sweep_metrics import MetricsCalculator, SweepMetrics

THEOREMS = ("equal", "cmPower2", "cmPowers", "cm_t1", "cmordinary", "cmsymbolic", "depth")


def _outcome(agreement: Optional[bool]) -> str:
    if agreement is None:
        return "inconclusive"
    return "agree" if agreement else "disagree"


def run_check(graph: WeightedOrientedGraph, theorem: str, t: int, field: CoefficientField,
              scan_to: int = config.DEFAULT_SCAN_T) -> Dict[str, Any]:
    """Run one structural-versus-oracle check and report its outcome"""
    entry: Dict[str, Any] = {"theorem": theorem, "t": "all" if theorem in ("cmordinary", "cmsymbolic") else t}
    try:
        if theorem == "equal":
            verdict = powers_equal(graph, t, verify=True)
            entry.update(structural=verdict.structural, direct=verdict.direct, outcome=_outcome(verdict.agreement))
            if verdict.witness is not None:
                entry["witness"] = list(verdict.witness.exponents)
                entry["witness_verified"] = (member(symbolic_power(graph, t), verdict.witness)
                                             and not member(power(edge_ideal(graph), t), verdict.witness))
        elif theorem in ("cmPower2", "cmPowers", "cm_t1"):
            index = {"cmPower2": 2, "cm_t1": 1}.get(theorem, max(t, 3))
            verdict = ordinary_cm(graph, index, verify=True, field=field)
            entry.update(t=index, structural=verdict.structural, cm=verdict.cm, outcome=_outcome(verdict.agreement))
        elif theorem == "cmordinary":
            verdict = ordinary_cm(graph, "all", verify=True, field=field, scan_to=scan_to)
            entry.update(structural=verdict.structural, failures=verdict.failures, outcome=_outcome(verdict.agreement))
        elif theorem == "cmsymbolic":
            verdict = symbolic_cm_all_t(graph, scan_to, field)
            entry.update(structural=verdict.structural, failures=verdict.failures, outcome=_outcome(verdict.agreement))
        elif theorem == "depth":
            ideal = edge_ideal(graph)
            for candidate in (power(ideal, t), symbolic_power(graph, t)):
                if not candidate.is_zero:
                    depth(candidate, field, method="both")
            entry["outcome"] = "agree"
        else:
            raise InvalidParameterError(f"unknown check `{theorem}`, expected one of {THEOREMS}")
    except DisagreementError as e:
        entry.update(outcome="disagree", message=str(e), bundle=e.bundle)
    except EdgeIdealError as e:
        entry.update(outcome="error", message=f"{type(e).__name__}: {e}")
    return entry


def run_instance(instance: SweepInstance, field_name: str = "q", scan_to: int = config.DEFAULT_SCAN_T) -> Dict[str, Any]:
    """Worker entry point; module level so it can be shipped to a process pool"""
    field = CoefficientField.parse(field_name)
    start_time = time.time()
    checks = [run_check(instance.graph, theorem, t, field, scan_to) for theorem, t in instance.checks]
    logger.debug(f"Instance {instance.instance_id} done in {time.time() - start_time:.2f}s")
    return {
        "instance_id": instance.instance_id,
        "origin": instance.origin,
        "graph": to_document(instance.graph).model_dump(),
        "checks": checks,
    }


class SweepRunner:
    """
    Runs sweep instances through the theorem checks.

    ``workers <= 1`` runs in-process; otherwise a process pool does the work
    and an asyncio semaphore bounds the number of instances in flight.
    """

    def __init__(self,
                 field: str = "q",
                 scan_to: int = config.DEFAULT_SCAN_T,
                 workers: int = 1,
                 output_dir: Optional[str] = None,
                 bundle_dir: str = "counterexamples"):
        self.field = CoefficientField.parse(field).name
        self.scan_to = scan_to
        self.workers = workers
        self.output_dir = Path(output_dir) if output_dir else None
        self.bundle_dir = Path(bundle_dir)
        self.metrics_calculator = MetricsCalculator()

        logger.info(f"Sweep runner initialized: field {self.field}, workers {workers}, scan to t={scan_to}")

    async def run_all(self, instances: List[SweepInstance]) -> List[Dict[str, Any]]:
        logger.info(f"Running {len(instances)} instances...")
        start_time = time.time()

        if self.workers <= 1:
            results = [run_instance(instance, self.field, self.scan_to) for instance in instances]
        else:
            loop = asyncio.get_running_loop()
            semaphore = asyncio.Semaphore(self.workers)
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                async def run_with_semaphore(instance):
                    async with semaphore:
                        return await loop.run_in_executor(pool, run_instance, instance, self.field, self.scan_to)

                results = await asyncio.gather(*(run_with_semaphore(instance) for instance in instances))

        logger.info(f"All instances completed in {time.time() - start_time:.2f}s")
        return sorted(results, key=lambda r: r["instance_id"])

    def evaluate(self, results: List[Dict[str, Any]]) -> SweepMetrics:
        metrics = self.metrics_calculator.calculate_aggregate_metrics(results)
        if metrics.disagreements:
            logger.error(f"{metrics.disagreements} disagreements in {metrics.total_checks} checks")
        else:
            logger.success(f"No disagreements in {metrics.total_checks} checks")
        return metrics

    def write_bundles(self, results: List[Dict[str, Any]]) -> List[str]:
        """One JSON counterexample bundle per disagreeing check"""
        written = []
        for result in results:
            for check in result["checks"]:
                if check["outcome"] != "disagree":
                    continue
                self.bundle_dir.mkdir(parents=True, exist_ok=True)
                path = self.bundle_dir / f"{result['instance_id']}_{check['theorem']}_{check['t']}.json"
                with open(path, 'w', encoding='utf-8') as f:
                    json.dump({"instance_id": result["instance_id"], **check}, f, indent=2, default=str)
                written.append(str(path))
        if written:
            logger.warning(f"Wrote {len(written)} counterexample bundles to {self.bundle_dir}")
        return written

    def save_results(self, results: List[Dict[str, Any]], metrics: SweepMetrics, run_id: str) -> Dict[str, str]:
        """Save results, metrics, summary table and report under the output directory"""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        output_files = {}

        results_file = self.output_dir / f"sweep_results_{run_id}.json"
        with open(results_file, 'w', encoding='utf-8') as f:
            json.dump(results, f, indent=2, default=str)
        output_files['results'] = str(results_file)

        metrics_file = self.output_dir / f"sweep_metrics_{run_id}.json"
        with open(metrics_file, 'w', encoding='utf-8') as f:
            json.dump(asdict(metrics), f, indent=2)
        output_files['metrics'] = str(metrics_file)

        summary_file = self.output_dir / f"sweep_summary_{run_id}.csv"
        self.metrics_calculator.summary_frame(results).to_csv(summary_file, index=False)
        output_files['summary'] = str(summary_file)

        report_file = self.output_dir / f"sweep_report_{run_id}.txt"
        with open(report_file, 'w', encoding='utf-8') as f:
            f.write(self.metrics_calculator.generate_detailed_report(metrics, results))
        output_files['report'] = str(report_file)

        logger.info(f"Sweep results saved to {self.output_dir}")
        return output_files

    async def run_sweep(self, instances: List[SweepInstance]) -> Dict[str, Any]:
        """Run, evaluate, write bundles and (optionally) save; the returned summary is deterministic"""
        results = await self.run_all(instances)
        metrics = self.evaluate(results)
        bundles = self.write_bundles(results)
        summary: Dict[str, Any] = {
            "metrics": asdict(metrics),
            "per_theorem": json.loads(self.metrics_calculator.summary_frame(results).to_json(orient="records")),
            "bundles": bundles,
        }
        if self.output_dir:
            summary["output_files"] = self.save_results(results, metrics, f"{int(time.time())}")
        self.print_sweep_summary(metrics)
        return summary

    def print_sweep_summary(self, metrics: SweepMetrics):
        # stdout is reserved for the JSON report
        print("\n" + "=" * 60, file=sys.stderr)
        print("THEOREM SWEEP SUMMARY", file=sys.stderr)
        print("=" * 60, file=sys.stderr)
        print(f"Instances: {metrics.total_instances}", file=sys.stderr)
        print(f"Checks: {metrics.total_checks}", file=sys.stderr)
        print(f"Disagreements: {metrics.disagreements}", file=sys.stderr)
        print(f"Inconclusive: {metrics.inconclusive}", file=sys.stderr)
        print(f"Errors: {metrics.errors}", file=sys.stderr)
        print(f"Agreement Rate: {metrics.agreement_rate:.1%}", file=sys.stderr)
        print("=" * 60, file=sys.stderr)
