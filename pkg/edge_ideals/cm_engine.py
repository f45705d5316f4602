from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from loguru import logger
from more_itertools import powerset

from edge_ideals import config
from edge_ideals.complexes import (
    RATIONALS,
    CoefficientField,
    SimplicialComplex,
    check_ambient,
    homology_ranks,
    minimal_vertex_covers,
    reisner_cm,
    sr_depth,
    strong_cover,
)
from edge_ideals.errors import CapExceededError, DisagreementError, ImproperIdealError, InvalidParameterError
from edge_ideals.graph_core import WeightedOrientedGraph, underlying_graph
from edge_ideals.ideals import (
    Monomial,
    MonomialIdeal,
    associated_primes,
    box_points,
    colon,
    krull_dim,
    member,
    minimal_primes,
    radical,
)
from edge_ideals.models import BettiEntryDocument, CMReportDocument

Degree = Tuple[int, ...]
METHODS = ("betti", "colon", "both")


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers of R/I keyed by (i, degree)"""
    n: int
    entries: Dict[Tuple[int, Degree], int]
    field: CoefficientField

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def rank(self, i: int, degree: Sequence[int]) -> int:
        return self.entries.get((i, tuple(degree)), 0)

    def total(self, i: int) -> int:
        return sum(r for (j, _), r in self.entries.items() if j == i)

    def sorted_entries(self) -> List[Tuple[int, Degree, int]]:
        return sorted(((i, a, r) for (i, a), r in self.entries.items()), key=lambda e: (e[0], sum(e[1]), e[1]))

    def to_documents(self) -> List[BettiEntryDocument]:
        return [BettiEntryDocument(i=i, degree=list(a), rank=r) for i, a, r in self.sorted_entries()]

    def to_list(self) -> List[Dict[str, Any]]:
        return [entry.model_dump() for entry in self.to_documents()]


@dataclass
class CMReport:
    depth: int
    dim: int
    pd: int
    cm: bool
    method: str
    field: CoefficientField
    depth_colon: Optional[int] = None
    unmixed: Optional[bool] = None
    embedded_primes: Optional[bool] = None
    witness: Optional[Dict[str, Any]] = None
    betti: Optional[BettiTable] = field(default=None, repr=False)

    def to_document(self) -> CMReportDocument:
        return CMReportDocument(
            depth=self.depth,
            depth_colon=self.depth_colon,
            dim=self.dim,
            pd=self.pd,
            cm=self.cm,
            method=self.method,
            field=self.field.name,
            unmixed=self.unmixed,
            embedded_primes=self.embedded_primes,
            witness=self.witness,
        )

    def to_dict(self) -> Dict[str, Any]:
        return self.to_document().model_dump(exclude_none=True)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose Stanley-Reisner ideal is the radical of ``ideal``"""
    if ideal.is_unit:
        return SimplicialComplex.void_complex(ideal.n)
    everything = frozenset(range(1, ideal.n + 1))
    return SimplicialComplex(ideal.n, tuple(everything - p for p in minimal_primes(ideal)))


def degree_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    if len(a) != ideal.n:
        raise InvalidParameterError(f"degree {list(a)} has the wrong length for {ideal.n} variables")
    return stanley_reisner_complex(radical(colon(ideal, Monomial(tuple(a)))))


def symbolic_degree_facets(graph: WeightedOrientedGraph, t: int, a: Sequence[int]) -> List[FrozenSet[int]]:
    """Facets of the degree complex of the t-th symbolic power read off the minimal covers"""
    if t < 1:
        raise InvalidParameterError(f"power index must be at least 1, got {t}")
    if len(a) != graph.n:
        raise InvalidParameterError(f"degree {list(a)} has the wrong length for {graph.n} variables")
    everything = frozenset(graph.vertices)
    facets = []
    for cover in minimal_vertex_covers(underlying_graph(graph)):
        l1 = strong_cover(graph, cover).l1
        total = sum(a[i - 1] for i in l1) + sum(a[j - 1] // graph.weight(j) for j in cover - l1)
        if total <= t - 1:
            facets.append(everything - cover)
    return sorted(facets, key=lambda f: tuple(sorted(f)))


def koszul_complex(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """Upper Koszul complex: squarefree tau below a with x^(a - tau) in I"""
    top = Monomial(tuple(a))
    if not member(ideal, top):
        return SimplicialComplex.void_complex(ideal.n)
    support = sorted(top.support)
    check_ambient(len(support))
    faces = []
    for tau in powerset(support):
        shifted = Monomial(tuple(e - (1 if i in tau else 0) for i, e in enumerate(top.exponents, start=1)))
        if member(ideal, shifted):
            faces.append(frozenset(tau))
    return SimplicialComplex(ideal.n, tuple(faces))


def lcm_lattice(ideal: MonomialIdeal, cap: Optional[int] = None) -> List[Monomial]:
    """All lcms of nonempty generator subsets, by closure under lcm with a generator"""
    limit = cap or config.MAX_LATTICE_POINTS
    found = set(ideal.gens)
    frontier = list(ideal.gens)
    while frontier:
        following = []
        for m in frontier:
            for g in ideal.gens:
                joined = m.lcm(g)
                if joined not in found:
                    found.add(joined)
                    following.append(joined)
        if len(found) > limit:
            raise CapExceededError(f"lcm lattice exceeds the cap of {limit} points")
        frontier = following
    return sorted(found, key=Monomial.sort_key)


def betti_table(ideal: MonomialIdeal, field: CoefficientField = RATIONALS, cap: Optional[int] = None) -> BettiTable:
    if ideal.is_unit:
        raise ImproperIdealError("Betti numbers of R/R are all zero")
    entries: Dict[Tuple[int, Degree], int] = {(0, (0,) * ideal.n): 1}
    degrees = lcm_lattice(ideal, cap)
    for m in degrees:
        profile = homology_ranks(koszul_complex(ideal, m.exponents), field)
        for index, rank in enumerate(profile.ranks):
            if rank:
                entries[(index + 1, m.exponents)] = rank
    logger.debug(f"Betti table over {field.name}: {len(entries)} nonzero entries from {len(degrees)} degrees")
    return BettiTable(ideal.n, entries, field)


def _colon_depth(ideal: MonomialIdeal, field: CoefficientField, max_box: Optional[int]) -> Tuple[int, Monomial]:
    best = None
    witness = None
    for f in sorted(box_points(ideal, max_box), key=Monomial.sort_key):
        if member(ideal, f):
            continue
        value = sr_depth(stanley_reisner_complex(radical(colon(ideal, f))), field)
        if best is None or value < best:
            best, witness = value, f
    return best, witness


def depth(ideal: MonomialIdeal, field: CoefficientField = RATIONALS, method: str = "betti",
          max_box: Optional[int] = None, max_lattice: Optional[int] = None) -> CMReport:
    """Depth of R/I from the projective dimension, from colon radicals, or both"""
    if method not in METHODS:
        raise InvalidParameterError(f"unknown depth method `{method}`, expected one of {METHODS}")
    if ideal.is_unit:
        raise ImproperIdealError("depth of R/R is undefined")
    dim = krull_dim(ideal)

    table = None
    depth_betti = None
    if method in ("betti", "both"):
        table = betti_table(ideal, field, max_lattice)
        depth_betti = ideal.n - table.pd

    depth_colon = None
    colon_witness = None
    if method in ("colon", "both"):
        depth_colon, colon_witness = _colon_depth(ideal, field, max_box)

    if method == "both" and depth_betti != depth_colon:
        logger.error(f"Depth disagreement on {ideal}: betti {depth_betti}, colon {depth_colon}")
        raise DisagreementError(
            f"depth by Betti numbers ({depth_betti}) differs from depth by colons ({depth_colon})",
            bundle={"ideal": ideal.to_dict(), "depth_betti": depth_betti, "depth_colon": depth_colon,
                    "betti": table.to_list(), "field": field.name},
        )

    value = depth_betti if depth_betti is not None else depth_colon
    report = CMReport(
        depth=value,
        dim=dim,
        pd=table.pd if table else ideal.n - value,
        cm=value == dim,
        method=method,
        field=field,
        depth_colon=depth_colon if method == "both" else None,
        betti=table,
    )
    if not report.cm:
        if table is not None:
            degree = min((a for i, a in table.entries if i == table.pd), key=lambda a: (sum(a), a))
            report.witness = {"kind": "betti", "index": table.pd, "degree": list(degree)}
        else:
            report.witness = {"kind": "colon", "monomial": list(colon_witness.exponents)}
    return report


def lemma_check(ideal: MonomialIdeal, field: CoefficientField = RATIONALS,
                max_box: Optional[int] = None) -> Tuple[bool, bool, bool]:
    """(unmixed, embedded_primes, every colon radical is CM)"""
    primes = associated_primes(ideal, max_box)
    minimal = set(minimal_primes(ideal))
    unmixed = len({len(p) for p in primes}) == 1
    embedded = any(p not in minimal for p in primes)
    if embedded and len({len(p) for p in minimal}) == 1:
        logger.warning(f"{ideal} has equidimensional minimal primes but embedded primes {[sorted(p) for p in primes if p not in minimal]}")
    radicals_cm = all(
        reisner_cm(stanley_reisner_complex(radical(colon(ideal, f))), field)
        for f in box_points(ideal, max_box)
        if not member(ideal, f)
    )
    return unmixed, embedded, radicals_cm


def is_cm(ideal: MonomialIdeal, field: CoefficientField = RATIONALS, method: str = "betti",
          lemma: bool = False, max_box: Optional[int] = None, max_lattice: Optional[int] = None) -> CMReport:
    """Cohen-Macaulay test: depth against Krull dimension, optionally cross-checked by unmixedness and colon radicals"""
    if ideal.is_zero:
        n = ideal.n
        return CMReport(depth=n, dim=n, pd=0, cm=True, method=method, field=field, unmixed=True if lemma else None)
    report = depth(ideal, field, method, max_box, max_lattice)
    if lemma:
        unmixed, embedded, radicals_cm = lemma_check(ideal, field, max_box)
        report.unmixed = unmixed
        report.embedded_primes = embedded
        if (unmixed and radicals_cm) != report.cm:
            logger.error(f"CM disagreement on {ideal}: depth says {report.cm}, unmixed={unmixed} radicals_cm={radicals_cm}")
            raise DisagreementError(
                "depth-based and colon-radical Cohen-Macaulay tests disagree",
                bundle={"ideal": ideal.to_dict(), "report": report.to_dict(),
                        "unmixed": unmixed, "radicals_cm": radicals_cm},
            )
    logger.debug(f"{ideal}: depth {report.depth}, dim {report.dim}, cm={report.cm}")
    return report
