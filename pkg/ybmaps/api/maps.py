# api/maps.py
"""
Concrete Yang-Baxter maps and the name registry used by the CLI.

- adler: dressing-chain symmetry on sites (f; beta)
- kdv: rank-1 polarization change of two matrix-KdV solitons on sites (xi, eta; lambda)
- lyubashenko: R(x, y) = (p(x), q(y)) for a preset pair of rational maps
- identity, permutation: baselines that pass every verifier
- sumleft: R(x, y) = (x + y, y), a non-example used as a negative control
"""
from __future__ import annotations
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, ClassVar, Dict, List, Optional, Sequence, Tuple

from ybmaps.api.algebra import LaxMatrix, PolyZ, RatFunZ, as_rational, format_rational, ratfun_eq
from ybmaps.api.errors import ConfigError, DimensionMismatch, SingularInput
from ybmaps.api.sampling import SampleBox, SiteSampler, random_rational, random_vector
from ybmaps.api.ybcore import ScalarSite, Site, TupleState, YBMap, check_YB

log = logging.getLogger(__name__)


# --------------------------
# Site types
# --------------------------
@dataclass(frozen=True)
class DressingSite(Site):
    kind: ClassVar[str] = "dressing"
    f: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "f", as_rational(self.f))
        object.__setattr__(self, "beta", as_rational(self.beta))

    def components(self) -> Tuple[Fraction, ...]:
        return (self.f, self.beta)

    def fields(self) -> Dict[str, str]:
        return {"f": format_rational(self.f), "beta": format_rational(self.beta)}


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class KdvSite(Site):
    """Representative (xi, eta) of the projector xi (x) eta / (xi, eta), with velocity lam."""
    kind: ClassVar[str] = "kdv"
    xi: Tuple[Fraction, ...]
    eta: Tuple[Fraction, ...]
    lam: Fraction

    def __post_init__(self):
        xi = tuple(as_rational(c) for c in self.xi)
        eta = tuple(as_rational(c) for c in self.eta)
        if not xi or len(xi) != len(eta):
            raise DimensionMismatch(f"xi and eta must have the same positive length, got {len(xi)} and {len(eta)}")
        if _dot(xi, eta) == 0:
            raise SingularInput("pairing (xi, eta) vanishes")
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "lam", as_rational(self.lam))

    @property
    def d(self) -> int:
        return len(self.xi)

    @property
    def pairing(self) -> Fraction:
        return _dot(self.xi, self.eta)

    def components(self) -> Tuple[Fraction, ...]:
        return self.xi + self.eta + (self.lam,)

    def fields(self) -> Dict[str, str]:
        out = {f"xi{k}": format_rational(c) for k, c in enumerate(self.xi, start=1)}
        out.update({f"eta{k}": format_rational(c) for k, c in enumerate(self.eta, start=1)})
        out["lam"] = format_rational(self.lam)
        return out

    def same_state(self, other: Site) -> bool:
        # states are projectors, representatives may differ by scale
        return isinstance(other, KdvSite) and self.lam == other.lam and projector_eq(self, other)


# --------------------------
# Adler
# --------------------------
def adler_R(x1: DressingSite, x2: DressingSite) -> Tuple[DressingSite, DressingSite]:
    s = x1.f + x2.f
    if s == 0:
        raise SingularInput("f1 + f2 = 0")
    delta = (x1.beta - x2.beta) / s
    return DressingSite(x2.f - delta, x1.beta), DressingSite(x1.f + delta, x2.beta)


# --------------------------
# Matrix KdV solitons
# --------------------------
def projector_of(s: KdvSite) -> LaxMatrix:
    p = s.pairing
    return LaxMatrix(tuple(tuple(a * b / p for b in s.eta) for a in s.xi))


def projector_eq(s: KdvSite, t: KdvSite) -> bool:
    return s.d == t.d and projector_of(s) == projector_of(t)


def _axpy(a: Fraction, x: Sequence[Fraction], y: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(a * u + v for u, v in zip(x, y))


def kdv_R(s1: KdvSite, s2: KdvSite) -> Tuple[KdvSite, KdvSite]:
    if s1.d != s2.d:
        raise DimensionMismatch(f"Solitons of dimensions {s1.d} and {s2.d}")
    if s1.lam == s2.lam:
        raise SingularInput("lambda1 = lambda2")
    k = 2 * s2.lam / (s1.lam - s2.lam)
    m = 2 * s1.lam / (s1.lam - s2.lam)
    p1, p2 = s1.pairing, s2.pairing
    xi1 = _axpy(k * _dot(s1.xi, s2.eta) / p2, s2.xi, s1.xi)
    eta1 = _axpy(k * _dot(s2.xi, s1.eta) / p2, s2.eta, s1.eta)
    xi2 = _axpy(-m * _dot(s2.xi, s1.eta) / p1, s1.xi, s2.xi)
    eta2 = _axpy(-m * _dot(s1.xi, s2.eta) / p1, s1.eta, s2.eta)
    if _dot(xi1, eta1) == 0:
        raise SingularInput("output pairing (xi1~, eta1~) vanishes")
    if _dot(xi2, eta2) == 0:
        raise SingularInput("output pairing (xi2~, eta2~) vanishes")
    return KdvSite(xi1, eta1, s1.lam), KdvSite(xi2, eta2, s2.lam)


# --------------------------
# Lyubashenko
# --------------------------
@dataclass(frozen=True)
class LyubashenkoPair:
    p: RatFunZ
    q: RatFunZ
    name: str = "custom"

    def __post_init__(self):
        for label in ("p", "q"):
            value = getattr(self, label)
            if not isinstance(value, RatFunZ):
                value = RatFunZ(value if isinstance(value, PolyZ) else PolyZ(tuple(value)))
                object.__setattr__(self, label, value)
            if value.is_constant():
                raise ValueError(f"Lyubashenko {label} must be nonconstant")

    def commute(self) -> bool:
        return ratfun_eq(self.p.compose(self.q), self.q.compose(self.p))

    def reversible(self) -> bool:
        zeta = RatFunZ.zeta()
        return ratfun_eq(self.q.compose(self.p), zeta) and ratfun_eq(self.p.compose(self.q), zeta)


LYUBASHENKO_PRESETS: Dict[str, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    "powers": ((0, 0, 1), (0, 0, 0, 1)),
    "chebyshev": ((-1, 0, 2), (0, -3, 0, 4)),
    "shift": ((1, 1), (-1, 1)),
    "mixed": ((1, 1), (0, 0, 1)),
}


def lyubashenko_pair(name: str) -> LyubashenkoPair:
    if name not in LYUBASHENKO_PRESETS:
        raise ConfigError(f"Unknown Lyubashenko pair '{name}'. Choose from {sorted(LYUBASHENKO_PRESETS)}")
    p, q = LYUBASHENKO_PRESETS[name]
    return LyubashenkoPair(PolyZ(p), PolyZ(q), name)


def _eval_at(r: RatFunZ, z: Fraction, label: str) -> Fraction:
    try:
        return r.evaluate(z)
    except ZeroDivisionError:
        raise SingularInput(f"{label} has a pole at {format_rational(z)}")


def lyubashenko_R(pq: LyubashenkoPair, x: ScalarSite, y: ScalarSite) -> Tuple[ScalarSite, ScalarSite]:
    return ScalarSite(_eval_at(pq.p, x.z, "p")), ScalarSite(_eval_at(pq.q, y.z, "q"))


def lyubashenko_map(pq: LyubashenkoPair) -> YBMap:
    return YBMap(
        name="lyubashenko",
        kind="scalar",
        evaluator=lambda x, y: lyubashenko_R(pq, x, y),
        singular_set="poles of p and q",
        description=f"R(x, y) = (p(x), q(y)) with p = {pq.p}, q = {pq.q} ({pq.name})",
    )


@dataclass
class LyubashenkoVerdict:
    pair: LyubashenkoPair
    yb: List[Optional[bool]]  # None where the sample hit a pole
    pointwise_commute: List[Optional[bool]]

    @property
    def agrees(self) -> bool:
        """check_YB matches p(q(b)) = q(p(b)) at the middle slot on every usable sample."""
        return all(a == b for a, b in zip(self.yb, self.pointwise_commute) if a is not None)

    @property
    def skipped(self) -> int:
        return sum(1 for a in self.yb if a is None)

    @property
    def function_commute(self) -> bool:
        return self.pair.commute()

    @property
    def function_reversible(self) -> bool:
        return self.pair.reversible()


def lyubashenko_yb_iff_commute(pq: LyubashenkoPair, samples: Sequence[TupleState]) -> LyubashenkoVerdict:
    m = lyubashenko_map(pq)
    yb: List[Optional[bool]] = []
    pointwise: List[Optional[bool]] = []
    for s in samples:
        b = s.site(2).z
        try:
            holds = check_YB(m, s)
            pq_b = _eval_at(pq.p, _eval_at(pq.q, b, "q"), "p")
            qp_b = _eval_at(pq.q, _eval_at(pq.p, b, "p"), "q")
        except SingularInput as e:
            log.debug("lyubashenko sample skipped: %s", e)
            yb.append(None)
            pointwise.append(None)
            continue
        yb.append(holds)
        pointwise.append(pq_b == qp_b)
    return LyubashenkoVerdict(pq, yb, pointwise)


# --------------------------
# Baselines
# --------------------------
IDENTITY = YBMap("identity", None, lambda x, y: (x, y), description="R(x, y) = (x, y)")
PERMUTATION = YBMap("permutation", None, lambda x, y: (y, x), description="P(x, y) = (y, x)")


def sumleft_R(x: ScalarSite, y: ScalarSite) -> Tuple[ScalarSite, ScalarSite]:
    return ScalarSite(x.z + y.z), y


SUMLEFT = YBMap("sumleft", "scalar", sumleft_R, description="R(x, y) = (x + y, y); not a Yang-Baxter map")
ADLER = YBMap("adler", "dressing", adler_R, singular_set="f1 + f2 = 0", description="Adler's dressing-chain map")
KDV = YBMap(
    "kdv",
    "kdv",
    kdv_R,
    singular_set="lambda1 = lambda2, or a vanishing input/output pairing",
    description="matrix KdV soliton polarization map",
)


# --------------------------
# Samplers
# --------------------------
def sample_scalar_site(rng: random.Random, box: SampleBox, d: int) -> ScalarSite:
    return ScalarSite(random_rational(rng, box))


def sample_dressing_site(rng: random.Random, box: SampleBox, d: int) -> DressingSite:
    return DressingSite(random_rational(rng, box), random_rational(rng, box))


def kdv_velocity(s: KdvSite) -> Fraction:
    return s.lam


def sample_kdv_site(rng: random.Random, box: SampleBox, d: int) -> KdvSite:
    while True:
        xi, eta = random_vector(rng, box, d), random_vector(rng, box, d)
        if _dot(xi, eta) != 0:
            return KdvSite(xi, eta, random_rational(rng, box))


# --------------------------
# Registry
# --------------------------
@dataclass(frozen=True)
class MapEntry:
    ybmap: YBMap
    site_kind: str
    sampler: SiteSampler
    family: Optional[str] = None
    pair: Optional[LyubashenkoPair] = None
    distinct: Optional[Callable[[Site], Any]] = None  # key that must differ between sites of one sample


MAP_NAMES = ["adler", "kdv", "lyubashenko", "identity", "permutation", "sumleft"]


def get_map(name: str, pair: Optional[str] = None) -> MapEntry:
    if name == "adler":
        return MapEntry(ADLER, "dressing", sample_dressing_site, family="dressing")
    if name == "kdv":
        return MapEntry(KDV, "kdv", sample_kdv_site, family="kdv", distinct=kdv_velocity)
    if name == "lyubashenko":
        pq = lyubashenko_pair(pair or "powers")
        return MapEntry(lyubashenko_map(pq), "scalar", sample_scalar_site, pair=pq)
    if name == "identity":
        return MapEntry(IDENTITY, "scalar", sample_scalar_site)
    if name == "permutation":
        return MapEntry(PERMUTATION, "scalar", sample_scalar_site)
    if name == "sumleft":
        return MapEntry(SUMLEFT, "scalar", sample_scalar_site)
    raise ConfigError(f"Unknown map '{name}'. Choose from {MAP_NAMES}")


def list_maps() -> List[str]:
    return list(MAP_NAMES)
