import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from loguru import logger

from edge_ideals import config
from edge_ideals.cm_engine import CMReport, is_cm
from edge_ideals.complexes import RATIONALS, CoefficientField, independence_complex, reisner_cm, well_covered_report
from edge_ideals.errors import DisagreementError, InvalidParameterError
from edge_ideals.graph_core import (
    WeightedOrientedGraph,
    graph_from_edges,
    remove_isolated,
    structure_report,
    to_document,
    underlying_graph,
)
from edge_ideals.ideals import (
    Monomial,
    MonomialIdeal,
    associated_primes,
    edge_ideal,
    equals,
    is_subset,
    member,
    power,
    symbolic_power,
)
from edge_ideals.models import VerdictDocument

PowerIndex = Union[int, str]


@dataclass
class EqualityVerdict:
    t: int
    structural: bool
    reasons: List[Dict[str, Any]]
    direct: Optional[bool] = None
    witness: Optional[Monomial] = None

    @property
    def agreement(self) -> Optional[bool]:
        return None if self.direct is None else self.direct == self.structural

    def to_document(self) -> VerdictDocument:
        return VerdictDocument(
            theorem="equal",
            t=self.t,
            structural=self.structural,
            reasons=self.reasons,
            direct=self.direct,
            witness=list(self.witness.exponents) if self.witness else None,
            agreement=self.agreement,
        )


@dataclass
class CMVerdict:
    theorem: str
    t: PowerIndex
    structural: bool
    reasons: List[Dict[str, Any]] = field(default_factory=list)
    oracle: Dict[int, CMReport] = field(default_factory=dict)
    agreement: Optional[bool] = None
    failures: List[int] = field(default_factory=list)
    cm: Optional[bool] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    def to_document(self) -> VerdictDocument:
        return VerdictDocument(
            theorem=self.theorem,
            t=self.t,
            structural=self.structural,
            reasons=self.reasons,
            oracle={str(t): report.to_dict() for t, report in sorted(self.oracle.items())} or None,
            agreement=self.agreement,
            cm=self.cm,
            failures=self.failures if self.oracle else None,
            notes=self.notes or None,
        )


def _bundle(graph: WeightedOrientedGraph, **extra) -> Dict[str, Any]:
    bundle = {"graph": to_document(graph).model_dump()}
    for key, value in extra.items():
        bundle[key] = value.to_dict() if hasattr(value, "to_dict") else value
    return bundle


def check_witness(ordinary: MonomialIdeal, symbolic: MonomialIdeal, witness: Monomial):
    """A witness must lie in the symbolic power and outside the ordinary one"""
    if not member(symbolic, witness) or member(ordinary, witness):
        raise DisagreementError(
            f"witness {list(witness.exponents)} does not separate the two powers",
            bundle={"witness": list(witness.exponents), "power": ordinary.to_dict(), "symbolic": symbolic.to_dict()},
        )


def powers_equal(graph: WeightedOrientedGraph, t: int, verify: bool = False) -> EqualityVerdict:
    """Decide whether I(D)^t equals the t-th symbolic power from orientation, weights and odd girth"""
    if t < 2:
        raise InvalidParameterError(f"power equality needs t >= 2, got {t}")
    report = structure_report(graph)
    reasons = [{"kind": "non_sink_weighted_vertex", "value": v} for v in report.v_plus if v not in report.sinks]
    if report.odd_girth < 2 * t + 1:
        reasons.append({"kind": "odd_cycle", "value": int(report.odd_girth)})
    verdict = EqualityVerdict(t=t, structural=not reasons, reasons=reasons)
    if not verify:
        return verdict

    ideal = edge_ideal(graph)
    ordinary = power(ideal, t)
    symbolic = symbolic_power(graph, t)
    verdict.direct = equals(ordinary, symbolic)
    if not verdict.direct:
        verdict.witness = next(g for g in symbolic.gens if not member(ordinary, g))
        check_witness(ordinary, symbolic, verdict.witness)
    if verdict.direct != verdict.structural:
        logger.error(f"Power equality disagreement at t={t}: structural {verdict.structural}, direct {verdict.direct}")
        raise DisagreementError(
            f"structural test says {verdict.structural} but I^{t} == I^({t}) is {verdict.direct}",
            bundle=_bundle(graph, t=t, ideal=ideal, power=ordinary, symbolic=symbolic,
                           witness=list(verdict.witness.exponents) if verdict.witness else None),
        )
    return verdict


def symbolic_cm_all_t(graph: WeightedOrientedGraph, verify_up_to: int = 0,
                      field: CoefficientField = RATIONALS) -> CMVerdict:
    """All symbolic powers are Cohen-Macaulay exactly when every component is a clique"""
    if verify_up_to < 0:
        raise InvalidParameterError(f"verify_up_to must be nonnegative, got {verify_up_to}")
    report = structure_report(graph)
    reasons = [{"kind": "non_clique_component", "value": shape.size, "vertices": list(shape.vertices)}
               for shape in report.component_shapes if shape.kind == "other"]
    verdict = CMVerdict(theorem="cmsymbolic", t="all", structural=not reasons, reasons=reasons, cm=not reasons)
    for t in range(1, verify_up_to + 1):
        verdict.oracle[t] = is_cm(symbolic_power(graph, t), field)
        if not verdict.oracle[t].cm:
            verdict.failures.append(t)
    if not verify_up_to:
        return verdict

    if verdict.structural:
        verdict.agreement = not verdict.failures
    elif verdict.failures:
        verdict.agreement = True
    else:
        logger.warning(f"No non-Cohen-Macaulay symbolic power found for t <= {verify_up_to}; the scan is inconclusive")
    if verdict.agreement is False:
        raise DisagreementError(
            f"clique components but symbolic powers fail to be Cohen-Macaulay at t={verdict.failures}",
            bundle=_bundle(graph, failures=verdict.failures,
                           betti={t: verdict.oracle[t].betti.to_list() for t in verdict.failures}),
        )
    return verdict


def _ordinary_structure(graph: WeightedOrientedGraph, t: PowerIndex,
                        field: CoefficientField) -> Tuple[str, bool, List[Dict[str, Any]], Dict[str, Any]]:
    report = structure_report(graph)
    simple = underlying_graph(graph)
    reasons: List[Dict[str, Any]] = []
    notes: Dict[str, Any] = {}
    if t == 1:
        if not reisner_cm(independence_complex(simple), field):
            reasons.append({"kind": "radical_not_cm"})
        ideal = edge_ideal(graph)
        if not ideal.is_zero and len({len(p) for p in associated_primes(ideal)}) > 1:
            reasons.append({"kind": "mixed"})
        return "cm_t1", not reasons, reasons, notes
    if t == 2:
        reasons = [{"kind": "non_sink_weighted_vertex", "value": v} for v in report.v_plus if v not in report.sinks]
        if not report.triangle_free:
            reasons.append({"kind": "triangle"})
        _, _, in_w2 = well_covered_report(remove_isolated(simple))
        if not in_w2:
            reasons.append({"kind": "not_w2"})
        notes["w2_with_isolated"] = well_covered_report(simple)[2]
        return "cmPower2", not reasons, reasons, notes
    reasons = [{"kind": "component_not_edge", "value": shape.size, "vertices": list(shape.vertices)}
               for shape in report.component_shapes if shape.kind != "edge"]
    notes["isolated"] = list(report.isolated)
    notes["disjoint_edges_strict"] = report.disjoint_edges_strict
    return ("cmordinary" if t == "all" else "cmPowers"), not reasons, reasons, notes


def ordinary_cm(graph: WeightedOrientedGraph, t: PowerIndex, verify: bool = False,
                field: CoefficientField = RATIONALS, scan_to: int = config.DEFAULT_SCAN_T) -> CMVerdict:
    """Cohen-Macaulayness of the ordinary powers I(D)^t, or of all of them for t == "all" """
    if t != "all" and (not isinstance(t, int) or t < 1):
        raise InvalidParameterError(f"t must be a positive integer or 'all', got {t!r}")
    theorem, structural, reasons, notes = _ordinary_structure(graph, t, field)
    verdict = CMVerdict(theorem=theorem, t=t, structural=structural, reasons=reasons, notes=notes, cm=structural)
    ideal = edge_ideal(graph)

    if t == 1:
        # no structural criterion at t = 1; the necessary conditions above are checked against the oracle
        report = is_cm(ideal, field)
        verdict.oracle[1] = report
        verdict.cm = report.cm
        verdict.failures = [] if report.cm else [1]
        verdict.agreement = structural or not report.cm
    elif verify:
        for s in (range(1, scan_to + 1) if t == "all" else [t]):
            verdict.oracle[s] = is_cm(power(ideal, s), field)
            if not verdict.oracle[s].cm:
                verdict.failures.append(s)
        if structural:
            verdict.agreement = not verdict.failures
        elif verdict.failures:
            verdict.agreement = True
        elif t == "all":
            logger.warning(f"No non-Cohen-Macaulay power found for t <= {scan_to}; the scan is inconclusive")
        else:
            verdict.agreement = False

    if verdict.agreement is False:
        logger.error(f"{theorem} disagreement at t={t}: structural {structural}, failures {verdict.failures}")
        raise DisagreementError(
            f"{theorem}: structural verdict {structural} contradicts the oracle at t={t}",
            bundle=_bundle(graph, t=t, ideal=ideal,
                           oracle={s: r.to_dict() for s, r in verdict.oracle.items()},
                           betti={s: r.betti.to_list() for s, r in verdict.oracle.items() if r.betti}),
        )
    return verdict


def example_family(k: int) -> Tuple[WeightedOrientedGraph, int]:
    """The path 1->2->3->4 with weights (1, k, k, 1); its symbolic powers are CM exactly up to t = k"""
    if k < 1:
        raise InvalidParameterError(f"family parameter must be at least 1, got {k}")
    return graph_from_edges(4, [(1, 2), (2, 3), (3, 4)], [1, k, k, 1]), k


def solvable(k: int, t: int) -> Optional[Tuple[int, int, int, int]]:
    """First a in the box [0, t*k]^4 with a2//k + a3 >= t, a1 + a3 <= t - 1, a2 + a4 <= t - 1"""
    if k < 1 or t < 1:
        raise InvalidParameterError(f"k and t must be positive, got k={k}, t={t}")
    for a1, a2, a3, a4 in itertools.product(range(t * k + 1), repeat=4):
        if a2 // k + a3 >= t and a1 + a3 <= t - 1 and a2 + a4 <= t - 1:
            return a1, a2, a3, a4
    return None


def family_scan(k: int, scan_to: int, field: CoefficientField = RATIONALS) -> Dict[str, Any]:
    graph, threshold = example_family(k)
    cm_at, not_cm_at = [], []
    witnesses = {}
    for t in range(1, scan_to + 1):
        report = is_cm(symbolic_power(graph, t), field)
        (cm_at if report.cm else not_cm_at).append(t)
        found = solvable(k, t)
        witnesses[str(t)] = list(found) if found else None
        if (found is None) != report.cm:
            raise DisagreementError(
                f"family k={k}, t={t}: inequality system solvable={found is not None} but cm={report.cm}",
                bundle=_bundle(graph, k=k, t=t, report=report),
            )
    logger.success(f"Family k={k} scanned to t={scan_to}: CM at {cm_at}")
    return {"k": k, "threshold": threshold, "cm_at": cm_at, "not_cm_at": not_cm_at, "solvable": witnesses}


def symbolic_power_contains_ideal(graph: WeightedOrientedGraph) -> Dict[str, bool]:
    """Containment of I(D) in its first symbolic power, and whether it is strict"""
    ideal = edge_ideal(graph)
    first = symbolic_power(graph, 1)
    contained = is_subset(ideal, first)
    return {"contained": contained, "strict": contained and not equals(ideal, first)}
