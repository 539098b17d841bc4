# api/ybcore.py
"""
Operator calculus on X^n: R, R_ij, P_ij, S_i, omega, T_i, and exact verifiers.

Conventions:
- indices are 1-based; index arithmetic is mod n with n in place of 0
- in a written product of operators the rightmost factor acts first
- R_ij sends slot i to f(s_i, s_j) and slot j to g(s_i, s_j), for i < j and i > j alike,
  so R_21(x, y) = (g(y, x), f(y, x))
- parameters live inside the sites; P moves them, R keeps them per map rule
"""
from __future__ import annotations
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, ClassVar, Dict, Iterable, List, Optional, Sequence, Tuple

from ybmaps.api.algebra import as_rational, format_rational
from ybmaps.api.errors import IndexOutOfRange, KindMismatch, SingularInput

log = logging.getLogger(__name__)


# --------------------------
# Sites and states
# --------------------------
@dataclass(frozen=True)
class Site:
    kind: ClassVar[str] = "site"

    def components(self) -> Tuple[Fraction, ...]:
        raise NotImplementedError

    def fields(self) -> Dict[str, str]:
        """Column name -> serialized value."""
        raise NotImplementedError

    def same_state(self, other: "Site") -> bool:
        return self == other


@dataclass(frozen=True)
class ScalarSite(Site):
    kind: ClassVar[str] = "scalar"
    z: Fraction

    def __post_init__(self):
        object.__setattr__(self, "z", as_rational(self.z))

    def components(self) -> Tuple[Fraction, ...]:
        return (self.z,)

    def fields(self) -> Dict[str, str]:
        return {"z": format_rational(self.z)}


@dataclass(frozen=True)
class TupleState:
    sites: Tuple[Site, ...]

    def __post_init__(self):
        sites = tuple(self.sites)
        if not sites:
            raise IndexOutOfRange("A state needs at least one site")
        kinds = {s.kind for s in sites}
        if len(kinds) != 1:
            raise KindMismatch(f"Mixed site kinds in one state: {sorted(kinds)}")
        object.__setattr__(self, "sites", sites)

    @classmethod
    def of(cls, *sites: Site) -> "TupleState":
        return cls(tuple(sites))

    @property
    def n(self) -> int:
        return len(self.sites)

    @property
    def kind(self) -> str:
        return self.sites[0].kind

    def site(self, i: int) -> Site:
        _check_index(i, self.n)
        return self.sites[i - 1]

    def replace(self, updates: Dict[int, Site]) -> "TupleState":
        sites = list(self.sites)
        for i, s in updates.items():
            _check_index(i, self.n)
            sites[i - 1] = s
        return TupleState(tuple(sites))

    def components(self) -> Tuple[Fraction, ...]:
        return tuple(c for s in self.sites for c in s.components())

    def fields(self) -> Dict[str, str]:
        out: Dict[str, str] = {}
        for k, s in enumerate(self.sites, start=1):
            for name, value in s.fields().items():
                out[f"x{k}.{name}"] = value
        return out

    def same_state(self, other: "TupleState") -> bool:
        if self.n != other.n or self.kind != other.kind:
            return False
        return all(a.same_state(b) for a, b in zip(self.sites, other.sites))


# --------------------------
# Maps
# --------------------------
Evaluator = Callable[[Site, Site], Tuple[Site, Site]]


@dataclass(frozen=True)
class YBMap:
    name: str
    kind: Optional[str]  # None: accepts any homogeneous pair
    evaluator: Evaluator
    singular_set: str = ""
    description: str = ""


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"Index {i} outside 1..{n}")


def wrap(i: int, n: int) -> int:
    return (i - 1) % n + 1


def factor_name(i: int, j: int) -> str:
    return f"R_{i}{j}" if max(i, j) < 10 else f"R_{i},{j}"


def apply_R(m: YBMap, x: Site, y: Site) -> Tuple[Site, Site]:
    if x.kind != y.kind:
        raise KindMismatch(f"{m.name}: sites of kinds {x.kind} and {y.kind}")
    if m.kind is not None and x.kind != m.kind:
        raise KindMismatch(f"{m.name} acts on {m.kind} sites, got {x.kind}")
    return m.evaluator(x, y)


def apply_Rij(m: YBMap, s: TupleState, i: int, j: int) -> TupleState:
    _check_index(i, s.n)
    _check_index(j, s.n)
    if i == j:
        raise IndexOutOfRange(f"R_ij needs i != j, got i = j = {i}")
    u, v = apply_R(m, s.site(i), s.site(j))
    return s.replace({i: u, j: v})


def apply_P(s: TupleState, i: int, j: int) -> TupleState:
    _check_index(i, s.n)
    _check_index(j, s.n)
    return s.replace({i: s.site(j), j: s.site(i)})


def apply_omega(s: TupleState) -> TupleState:
    """omega = P_1n ... P_13 P_12; sends (a, b, c) to (c, a, b)."""
    for j in range(2, s.n + 1):
        s = apply_P(s, 1, j)
    return s


def apply_Si(m: YBMap, s: TupleState, i: int) -> TupleState:
    _check_index(i, s.n)
    j = wrap(i + 1, s.n)
    return apply_P(apply_Rij(m, s, i, j), i, j)


def monodromy_factors(n: int, i: int) -> List[Tuple[int, int]]:
    """Factors of T_i in application order: R_{i,i+1} first, R_{i,i+n-1} last."""
    _check_index(i, n)
    return [(i, wrap(i + k, n)) for k in range(1, n)]


def apply_Ti(m: YBMap, s: TupleState, i: int) -> TupleState:
    if s.n < 2:
        raise IndexOutOfRange("Monodromy maps need n >= 2")
    for a, b in monodromy_factors(s.n, i):
        try:
            s = apply_Rij(m, s, a, b)
        except SingularInput as e:
            if e.factor is not None:
                raise
            raise e.at(factor_name(a, b)) from e
    return s


def apply_word(m: YBMap, s: TupleState, word: Sequence[int]) -> TupleState:
    """T_{w1} T_{w2} ... T_{wk}; the last letter acts first."""
    for i in reversed(list(word)):
        s = apply_Ti(m, s, i)
    return s


# --------------------------
# Verifiers
# --------------------------
def _need_n(s: TupleState, n: int, what: str) -> None:
    if s.n != n:
        raise IndexOutOfRange(f"{what} needs n = {n}, got {s.n}")


def yb_sides(m: YBMap, triple: TupleState) -> Tuple[TupleState, TupleState]:
    """(R12 R13 R23)(s), (R23 R13 R12)(s)."""
    _need_n(triple, 3, "Yang-Baxter check")
    lhs = triple
    for i, j in ((2, 3), (1, 3), (1, 2)):
        lhs = apply_Rij(m, lhs, i, j)
    rhs = triple
    for i, j in ((1, 2), (1, 3), (2, 3)):
        rhs = apply_Rij(m, rhs, i, j)
    return lhs, rhs


def check_YB(m: YBMap, triple: TupleState) -> bool:
    lhs, rhs = yb_sides(m, triple)
    return lhs.same_state(rhs)


def check_reversibility(m: YBMap, pair: TupleState) -> bool:
    _need_n(pair, 2, "Reversibility check")
    out = apply_Rij(m, apply_Rij(m, pair, 1, 2), 2, 1)
    return out.same_state(pair)


def check_conjugation(m: YBMap, pair: TupleState) -> bool:
    """R_21 = P R P on the sample."""
    _need_n(pair, 2, "Conjugation check")
    direct = apply_Rij(m, pair, 2, 1)
    conj = apply_P(apply_Rij(m, apply_P(pair, 1, 2), 1, 2), 1, 2)
    return direct.same_state(conj)


def check_commutativity(m: YBMap, s: TupleState, i: int, j: int) -> bool:
    _check_index(i, s.n)
    _check_index(j, s.n)
    if i == j:
        return True
    return apply_word(m, s, (i, j)).same_state(apply_word(m, s, (j, i)))


def check_product_identity(m: YBMap, s: TupleState) -> bool:
    """T_1 T_2 ... T_n = Id."""
    return apply_word(m, s, range(1, s.n + 1)).same_state(s)


def check_involution(m: YBMap, s: TupleState, i: int) -> bool:
    return apply_Si(m, apply_Si(m, s, i), i).same_state(s)


def check_braid(m: YBMap, s: TupleState, i: int) -> bool:
    if s.n < 3:
        raise IndexOutOfRange(f"Braid relation needs n >= 3, got {s.n}")
    k = wrap(i + 1, s.n)
    lhs = apply_Si(m, apply_Si(m, apply_Si(m, s, i), k), i)
    rhs = apply_Si(m, apply_Si(m, apply_Si(m, s, k), i), k)
    return lhs.same_state(rhs)


def check_shift_covariance(m: YBMap, s: TupleState, i: int) -> bool:
    """omega T_i = T_{i+1} omega and omega S_i = S_{i+1} omega."""
    k = wrap(i + 1, s.n)
    t_ok = apply_omega(apply_Ti(m, s, i)).same_state(apply_Ti(m, apply_omega(s), k))
    s_ok = apply_omega(apply_Si(m, s, i)).same_state(apply_Si(m, apply_omega(s), k))
    return t_ok and s_ok


# --------------------------
# Batches
# --------------------------
@dataclass(frozen=True)
class SampleOutcome:
    index: int
    status: str  # pass | fail | skipped
    reason: str = ""


@dataclass
class BatchResult:
    outcomes: List[SampleOutcome] = field(default_factory=list)

    def _count(self, status: str) -> int:
        return sum(1 for o in self.outcomes if o.status == status)

    @property
    def counts(self) -> Dict[str, int]:
        return {
            "pass": self._count("pass"),
            "fail": self._count("fail"),
            "skipped": self._count("skipped"),
            "samples": len(self.outcomes),
        }

    @property
    def ok(self) -> bool:
        return self._count("fail") == 0


def run_batch(check: Callable[[TupleState], bool], samples: Iterable[TupleState], label: str = "") -> BatchResult:
    result = BatchResult()
    for k, s in enumerate(samples):
        try:
            status = "pass" if check(s) else "fail"
            reason = ""
        except SingularInput as e:
            status, reason = "skipped", str(e)
            log.debug("%s sample %d skipped: %s", label or "batch", k, reason)
        result.outcomes.append(SampleOutcome(k, status, reason))
    log.info("%s: %s", label or "batch", result.counts)
    return result


@dataclass
class MonodromyVerdict:
    """Samples of the n=2 product identity and of n=3 commutativity, judged together."""
    reversible: BatchResult
    commuting: BatchResult

    @property
    def failed_conditions(self) -> List[str]:
        failed = []
        if not self.reversible.ok:
            failed.append("n=2 product identity")
        if not self.commuting.ok:
            failed.append("n=3 commutativity")
        return failed

    @property
    def consistent(self) -> bool:
        return (
            not self.failed_conditions
            and self.reversible.counts["pass"] > 0
            and self.commuting.counts["pass"] > 0
        )


def yb_from_monodromy(
    m: YBMap,
    sample_pairs: Sequence[TupleState],
    sample_triples: Sequence[TupleState],
) -> MonodromyVerdict:
    if not sample_pairs or not sample_triples:
        raise ValueError("yb_from_monodromy needs non-empty pair and triple samples")
    reversible = run_batch(lambda s: check_product_identity(m, s), sample_pairs, f"{m.name} n=2 product")
    commuting = run_batch(lambda s: check_commutativity(m, s, 1, 2), sample_triples, f"{m.name} n=3 commute")
    return MonodromyVerdict(reversible, commuting)
