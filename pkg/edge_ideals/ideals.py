import itertools
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from loguru import logger

from edge_ideals import config
from edge_ideals.complexes import StrongCover, face_key, strong_cover, strong_vertex_covers
from edge_ideals.errors import (
    CapExceededError,
    DimensionMismatchError,
    ImproperIdealError,
    InvalidParameterError,
    NotStrongCoverError,
)
from edge_ideals.graph_core import WeightedOrientedGraph
from edge_ideals.models import IdealDocument


@dataclass(frozen=True)
class Monomial:
    """x^a for a nonnegative exponent vector a"""
    exponents: Tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise InvalidParameterError(f"negative exponent in {self.exponents}")
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "Monomial":
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, e in enumerate(self.exponents, start=1) if e)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.degree, self.exponents

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other)"""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(self.exponents, start=1) if e]
        return "*".join(factors) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal of k[x1..xn] given by its minimal generators in graded-lex order.

    The zero ideal has no generators; the unit ideal has the single generator 1.
    """
    n: int
    gens: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise DimensionMismatchError(f"generator {g.exponents} does not live in {self.n} variables")
        object.__setattr__(self, "gens", _minimal_generators(self.gens))

    @classmethod
    def from_exponents(cls, n: int, exponents: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, tuple(Monomial(tuple(e)) for e in exponents))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit_ideal(cls, n: int) -> "MonomialIdeal":
        return cls(n, (Monomial.unit(n),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    @property
    def max_exponent(self) -> int:
        return max((e for g in self.gens for e in g.exponents), default=0)

    def box_bounds(self) -> Tuple[int, ...]:
        """rho_i: the largest exponent of x_i among the generators"""
        return tuple(max((g.exponents[i] for g in self.gens), default=0) for i in range(self.n))

    def to_document(self) -> IdealDocument:
        return IdealDocument(n=self.n, gens=[list(g.exponents) for g in self.gens])

    def to_dict(self) -> Dict[str, object]:
        return self.to_document().model_dump()

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _minimal_generators(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    kept: List[Monomial] = []
    for m in sorted(set(gens), key=Monomial.sort_key):
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


def _same_ring(*ideals: MonomialIdeal):
    sizes = {i.n for i in ideals}
    if len(sizes) > 1:
        raise DimensionMismatchError(f"ideals live in different rings: {sorted(sizes)}")


def _check_exponents(largest: int):
    if largest >= config.EXPONENT_LIMIT:
        raise CapExceededError(f"exponent {largest} exceeds {config.EXPONENT_LIMIT - 1}")


def minimalize(n: int, gens: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(gens))


def member(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    if monomial.n != ideal.n:
        raise DimensionMismatchError(f"monomial in {monomial.n} variables, ideal in {ideal.n}")
    return any(g.divides(monomial) for g in ideal.gens)


def equals(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    _same_ring(first, second)
    return first.gens == second.gens


def is_subset(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    """True iff ``first`` is contained in ``second``"""
    _same_ring(first, second)
    return all(member(second, g) for g in first.gens)


def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return MonomialIdeal(first.n, tuple(g * h for g in first.gens for h in second.gens))


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return MonomialIdeal(first.n, first.gens + second.gens)


def power(ideal: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise InvalidParameterError(f"power index must be at least 1, got {t}")
    _check_exponents(ideal.max_exponent * t)
    result = ideal
    for _ in range(t - 1):
        result = product(result, ideal)
    return result


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return MonomialIdeal(first.n, tuple(g.lcm(h) for g in first.gens for h in second.gens))


def intersect_all(n: int, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Pairwise intersection; the empty intersection is the unit ideal"""
    result = MonomialIdeal.unit_ideal(n)
    for ideal in ideals:
        result = intersect(result, ideal)
    return result


def colon(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    if monomial.n != ideal.n:
        raise DimensionMismatchError(f"monomial in {monomial.n} variables, ideal in {ideal.n}")
    return MonomialIdeal(ideal.n, tuple(g.quotient(monomial) for g in ideal.gens))


def saturate(ideal: MonomialIdeal, v: int) -> MonomialIdeal:
    """I : x_v^infinity by repeated colon"""
    if not 1 <= v <= ideal.n:
        raise InvalidParameterError(f"variable x{v} is outside x1..x{ideal.n}")
    bound = ideal.box_bounds()[v - 1] if ideal.n else 0
    variable = Monomial.variable(ideal.n, v)
    current = ideal
    for _ in range(bound + 1):
        following = colon(current, variable)
        if following == current:
            return current
        current = following
    raise AssertionError(f"saturation by x{v} did not stabilize within {bound} steps")


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, tuple(Monomial(tuple(min(e, 1) for e in g.exponents)) for g in ideal.gens))


def w_action(ideal: MonomialIdeal, w: Sequence[int]) -> MonomialIdeal:
    """Scale the exponent of x_i by w_i in every generator"""
    if len(w) != ideal.n:
        raise DimensionMismatchError(f"weight vector of length {len(w)} for {ideal.n} variables")
    if any(x < 1 for x in w):
        raise InvalidParameterError(f"w-action needs positive entries, got {list(w)}")
    _check_exponents(ideal.max_exponent * max(w, default=1))
    return MonomialIdeal(ideal.n, tuple(Monomial(tuple(a * b for a, b in zip(g.exponents, w))) for g in ideal.gens))


def edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """One generator x_u * x_v^w(v) per directed edge (u, v)"""
    gens = []
    for u, v in graph.edges:
        exps = [0] * graph.n
        exps[u - 1] = 1
        exps[v - 1] = graph.weight(v)
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(graph.n, tuple(gens))


def cover_ideal(graph: WeightedOrientedGraph, cover: Union[StrongCover, Iterable[int]]) -> MonomialIdeal:
    vertices = cover.cover if isinstance(cover, StrongCover) else frozenset(cover)
    checked = strong_cover(graph, vertices)
    if checked is None:
        raise NotStrongCoverError(f"{sorted(vertices)} is not a strong vertex cover")
    gens = []
    for i in sorted(checked.cover):
        gens.append(Monomial.variable(graph.n, i, 1 if i in checked.l1 else graph.weight(i)))
    return MonomialIdeal(graph.n, tuple(gens))


def primary_decomposition(graph: WeightedOrientedGraph) -> List[MonomialIdeal]:
    """The irreducible components I_C, one per strong vertex cover, in cover order"""
    return [cover_ideal(graph, c) for c in strong_vertex_covers(graph)]


def symbolic_power(graph: WeightedOrientedGraph, t: int) -> MonomialIdeal:
    """Intersection of I_C^t over the minimal vertex covers C"""
    if t < 1:
        raise InvalidParameterError(f"power index must be at least 1, got {t}")
    components = [cover_ideal(graph, c) for c in strong_vertex_covers(graph) if c.minimal]
    result = intersect_all(graph.n, (power(q, t) for q in components))
    logger.debug(f"Symbolic power t={t}: {len(result.gens)} generators from {len(components)} components")
    return result


def symbolic_power_from_components(n: int, components: Sequence[MonomialIdeal], t: int) -> MonomialIdeal:
    """Symbolic power of the intersection of monomial primary ``components``"""
    if t < 1:
        raise InvalidParameterError(f"power index must be at least 1, got {t}")
    by_prime: Dict[FrozenSet[int], List[MonomialIdeal]] = {}
    for q in components:
        if q.is_unit:
            continue
        prime = frozenset(v for g in radical(q).gens for v in g.support)
        by_prime.setdefault(prime, []).append(q)
    minimal = [p for p in by_prime if not any(other < p for other in by_prime)]
    parts = (power(intersect_all(n, by_prime[p]), t) for p in sorted(minimal, key=face_key))
    return intersect_all(n, parts)


def _require_proper(ideal: MonomialIdeal, allow_zero: bool = False):
    if ideal.is_unit:
        raise ImproperIdealError("operation needs a proper ideal, got the unit ideal")
    if ideal.is_zero and not allow_zero:
        raise ImproperIdealError("operation needs a nonzero ideal")


def box_size(ideal: MonomialIdeal) -> int:
    return math.prod(r + 1 for r in ideal.box_bounds())


def box_points(ideal: MonomialIdeal, cap: Optional[int] = None) -> Iterable[Monomial]:
    """Every monomial with exponents in [0, rho]; each colon I : x^a is realized by one of them"""
    limit = cap or config.MAX_BOX_POINTS
    size = box_size(ideal)
    if size > limit:
        raise CapExceededError(f"box of {size} points exceeds the cap of {limit}")
    for exps in itertools.product(*(range(r + 1) for r in ideal.box_bounds())):
        yield Monomial(exps)


def associated_primes(ideal: MonomialIdeal, cap: Optional[int] = None) -> List[FrozenSet[int]]:
    _require_proper(ideal)
    found = set()
    for f in box_points(ideal, cap):
        if member(ideal, f):
            continue
        quotient = colon(ideal, f)
        if all(g.degree == 1 for g in quotient.gens):
            found.add(frozenset(v for g in quotient.gens for v in g.support))
    return sorted(found, key=face_key)


def minimal_primes(ideal: MonomialIdeal) -> List[FrozenSet[int]]:
    """Minimal transversals of the generator supports"""
    _require_proper(ideal, allow_zero=True)
    transversals = {frozenset()}
    for g in radical(ideal).gens:
        support = g.support
        grown = set()
        for t in transversals:
            if t & support:
                grown.add(t)
            else:
                grown.update(t | {x} for x in support)
        transversals = {t for t in grown if not any(other < t for other in grown)}
    return sorted(transversals, key=face_key)


def krull_dim(ideal: MonomialIdeal) -> int:
    _require_proper(ideal, allow_zero=True)
    return ideal.n - min(len(p) for p in minimal_primes(ideal))
