# api/lax.py
"""
Lax families A(x, zeta), monodromy matrices and spectral invariants.

Refactorization orientation, shared by every family here:
    R(x, y) = (x~, y~)  iff  A(x~) A(y~) = A(y) A(x),  x~ keeping x's parameter.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple

from ybmaps.api.algebra import (
    CharPoly,
    LaxMatrix,
    PolyZ,
    RatFunZ,
    as_rational,
    char_poly,
    mat_mul,
    mat_product,
    ratfun_eq,
)
from ybmaps.api.errors import ConfigError, DimensionMismatch, KindMismatch, NotFactorizable
from ybmaps.api.maps import DressingSite, KdvSite, projector_of
from ybmaps.api.ybcore import Site, TupleState, YBMap, apply_R

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LaxFamily:
    name: str
    kind: str
    dim: int
    builder: Callable[[Site], LaxMatrix]
    pole_of: Optional[Callable[[Site], Fraction]] = None  # simple pole per site, None for polynomial families

    def __call__(self, s: Site) -> LaxMatrix:
        if s.kind != self.kind:
            raise KindMismatch(f"Family '{self.name}' takes {self.kind} sites, got {s.kind}")
        a = self.builder(s)
        if a.dim != self.dim:
            raise DimensionMismatch(f"Family '{self.name}' has dim {self.dim}, site gives {a.dim}")
        return a


# --------------------------
# Families
# --------------------------
def dressing_A(s: DressingSite) -> LaxMatrix:
    """[[f, 1], [f^2 + beta - zeta, f]]."""
    f = s.f
    return LaxMatrix((
        (f, 1),
        (RatFunZ(PolyZ((f * f + s.beta, -1))), f),
    ))


def kdv_A(s: KdvSite) -> LaxMatrix:
    """I + 2 lam / (zeta - lam) P."""
    c = RatFunZ(PolyZ((2 * s.lam,)), PolyZ((-s.lam, 1)))
    p = projector_of(s)
    return LaxMatrix(tuple(
        tuple((1 if i == j else 0) + c * p[i, j] for j in range(s.d)) for i in range(s.d)
    ))


FAMILY_NAMES = ["dressing", "kdv"]


def get_family(name: str, d: int = 2) -> LaxFamily:
    if name == "dressing":
        return LaxFamily("dressing", "dressing", 2, dressing_A)
    if name == "kdv":
        if d < 1:
            raise ConfigError(f"kdv family needs d >= 1, got {d}")
        return LaxFamily("kdv", "kdv", d, kdv_A, pole_of=lambda s: s.lam)
    raise ConfigError(f"Unknown family '{name}'. Choose from {FAMILY_NAMES}")


# --------------------------
# Monodromy
# --------------------------
@dataclass(frozen=True)
class MonodromyMatrix:
    matrix: LaxMatrix
    factor_count: int


def monodromy(family: LaxFamily, s: TupleState) -> MonodromyMatrix:
    """M = A(x_n) ... A(x_1)."""
    factors = [family(x) for x in reversed(s.sites)]
    return MonodromyMatrix(mat_product(factors), s.n)


def clearing_factor(family: LaxFamily, s: TupleState) -> PolyZ:
    """prod (zeta - lam_i) over the sites; 1 for polynomial families."""
    out = PolyZ.one()
    if family.pole_of is None:
        return out
    for x in s.sites:
        out = out * PolyZ((-as_rational(family.pole_of(x)), 1))
    return out


def spectral_invariants(family: LaxFamily, s: TupleState) -> CharPoly:
    m = monodromy(family, s).matrix
    if family.pole_of is None:
        return char_poly(m)
    factor = clearing_factor(family, s)
    cleared = m.scale(RatFunZ(factor))
    if not cleared.is_polynomial():
        log.warning("monodromy of %s still has poles after clearing by %s", family.name, factor)
    return char_poly(cleared).with_clearing(factor)


# --------------------------
# Refactorization
# --------------------------
def matrices_equal(a: LaxMatrix, b: LaxMatrix) -> bool:
    if a.dim != b.dim:
        return False
    return all(ratfun_eq(x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))


def refactor_sides(family: LaxFamily, m: YBMap, x: Site, y: Site) -> Tuple[LaxMatrix, LaxMatrix]:
    """(A(x~) A(y~), A(y) A(x)) with (x~, y~) = R(x, y)."""
    xt, yt = apply_R(m, x, y)
    return mat_mul(family(xt), family(yt)), mat_mul(family(y), family(x))


def refactor_check(family: LaxFamily, m: YBMap, x: Site, y: Site) -> bool:
    if m.kind is not None and m.kind != family.kind:
        raise KindMismatch(f"Map '{m.name}' ({m.kind}) does not match family '{family.name}' ({family.kind})")
    lhs, rhs = refactor_sides(family, m, x, y)
    return matrices_equal(lhs, rhs)


def refactor_solve_dressing(l: LaxMatrix, beta1, beta2) -> Tuple[DressingSite, DressingSite]:
    """
    Split l = A(f1~, beta1) A(f2~, beta2) in the dressing family.

    With s = l_12 = f1~ + f2~ and l_11 = f2~ s + beta2 - zeta, the factors are
    f2~ = (l_11(0) - beta2) / s and f1~ = s - f2~. The split is checked against l.
    """
    beta1, beta2 = as_rational(beta1), as_rational(beta2)
    if l.dim != 2:
        raise NotFactorizable(f"Dressing products are 2x2, got {l.dim}x{l.dim}")
    l12, l11 = l[0, 1], l[0, 0]
    if not l12.is_constant() or l12.is_zero():
        raise NotFactorizable(f"l_12 must be a nonzero constant, got {l12}")
    if not l11.is_polynomial():
        raise NotFactorizable(f"l_11 must be polynomial, got {l11}")
    s = l12.constant_value()
    f2 = (l11.num.coeff(0) - beta2) / s
    f1 = s - f2
    x1, x2 = DressingSite(f1, beta1), DressingSite(f2, beta2)
    if not matrices_equal(mat_mul(dressing_A(x1), dressing_A(x2)), l):
        raise NotFactorizable("Residual mismatch: l is not A(f1, beta1) A(f2, beta2)")
    return x1, x2
