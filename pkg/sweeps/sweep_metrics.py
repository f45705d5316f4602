#!/usr/bin/env python3
"""
Metrics for theorem validation sweeps.

Aggregates per-check outcomes (agree, disagree, inconclusive, error) into
run-level metrics, a per-theorem pandas summary and a text report.
"""

from dataclasses import dataclass
from typing import Any, Dict, List

import pandas as pd
from loguru import logger

OUTCOMES = ("agree", "disagree", "inconclusive", "error")


@dataclass
class SweepMetrics:
    """Container for sweep metrics."""
    total_instances: int
    total_checks: int
    agreements: int
    disagreements: int
    inconclusive: int
    errors: int
    agreement_rate: float
    witnesses_emitted: int
    witnesses_verified: int


class MetricsCalculator:
    """Aggregates sweep results."""

    def check_rows(self, results: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
        rows = []
        for result in results:
            for check in result.get("checks", []):
                rows.append({
                    "instance_id": result["instance_id"],
                    "origin": result.get("origin", ""),
                    "theorem": check["theorem"],
                    "t": str(check["t"]),
                    "outcome": check["outcome"],
                    "structural": check.get("structural"),
                    "witness": check.get("witness") is not None,
                    "witness_verified": bool(check.get("witness_verified")),
                })
        return rows

    def calculate_aggregate_metrics(self, results: List[Dict[str, Any]]) -> SweepMetrics:
        rows = self.check_rows(results)
        counts = {outcome: sum(1 for r in rows if r["outcome"] == outcome) for outcome in OUTCOMES}
        decided = counts["agree"] + counts["disagree"]
        return SweepMetrics(
            total_instances=len(results),
            total_checks=len(rows),
            agreements=counts["agree"],
            disagreements=counts["disagree"],
            inconclusive=counts["inconclusive"],
            errors=counts["error"],
            agreement_rate=counts["agree"] / decided if decided else 1.0,
            witnesses_emitted=sum(1 for r in rows if r["witness"]),
            witnesses_verified=sum(1 for r in rows if r["witness_verified"]),
        )

    def summary_frame(self, results: List[Dict[str, Any]]) -> pd.DataFrame:
        """One row per (theorem, t) with outcome counts"""
        frame = pd.DataFrame(self.check_rows(results), columns=[
            "instance_id", "origin", "theorem", "t", "outcome", "structural", "witness", "witness_verified"])
        if frame.empty:
            return pd.DataFrame(columns=["theorem", "t", *OUTCOMES, "structural_true"])
        summary = (
            frame.groupby(["theorem", "t", "outcome"]).size().unstack(fill_value=0)
            .reindex(columns=list(OUTCOMES), fill_value=0)
        )
        summary["structural_true"] = frame["structural"].eq(True).groupby([frame["theorem"], frame["t"]]).sum()
        return summary.reset_index()

    def generate_detailed_report(self, metrics: SweepMetrics, results: List[Dict[str, Any]]) -> str:
        report = []
        report.append("=" * 80)
        report.append("THEOREM VALIDATION SWEEP REPORT")
        report.append("=" * 80)
        report.append("")

        report.append("SUMMARY METRICS:")
        report.append(f"  Instances: {metrics.total_instances}")
        report.append(f"  Checks: {metrics.total_checks}")
        report.append(f"  Agreements: {metrics.agreements}")
        report.append(f"  Disagreements: {metrics.disagreements}")
        report.append(f"  Inconclusive: {metrics.inconclusive}")
        report.append(f"  Errors: {metrics.errors}")
        report.append(f"  Agreement Rate: {metrics.agreement_rate:.2%}")
        report.append(f"  Witnesses Verified: {metrics.witnesses_verified}/{metrics.witnesses_emitted}")
        report.append("")

        report.append("PER THEOREM:")
        for row in self.summary_frame(results).to_dict(orient="records"):
            report.append(f"  {row['theorem']} t={row['t']}: agree {row['agree']}, disagree {row['disagree']}, "
                          f"inconclusive {row['inconclusive']}, error {row['error']}")
        report.append("")

        failed = [(r, c) for r in results for c in r.get("checks", []) if c["outcome"] in ("disagree", "error")]
        if failed:
            report.append("FAILED CHECKS:")
            for i, (result, check) in enumerate(failed, 1):
                report.append(f"  {i}. {result['instance_id']} {check['theorem']} t={check['t']}")
                report.append(f"     Graph: {result.get('graph')}")
                report.append(f"     Detail: {check.get('message', 'no message')}")
            report.append("")

        report.append("=" * 80)
        logger.debug(f"Report built for {metrics.total_checks} checks")
        return "\n".join(report)
