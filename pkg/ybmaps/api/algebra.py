# api/algebra.py
"""
Exact arithmetic used by every identity check.

- Rational: fractions.Fraction; serialized as "p/q" (or "p" when q = 1)
- PolyZ: sympy Poly in zeta over QQ, read back as coefficients lowest degree first;
  the zero polynomial has no coefficients
- RatFunZ: num/den with the gcd cancelled and den monic, so equality is structural
- LaxMatrix: square matrix of RatFunZ
- CharPoly: coefficients c_0..c_d of det(M - lambda I), from DomainMatrix.charpoly
  over QQ(zeta) or from the trace recurrence
"""
from __future__ import annotations
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import sympy as sp
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ybmaps import settings
from ybmaps.api.errors import DimensionMismatch

ZETA = sp.Symbol("zeta")
QQ_ZETA = QQ.frac_field(ZETA)


# --------------------------
# Rationals
# --------------------------
def as_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational literal: {value!r}") from e
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(as_rational(q))


def bit_height(q: Fraction) -> int:
    return max(abs(q.numerator).bit_length(), q.denominator.bit_length())


def _to_qq(q: Fraction):
    return QQ(q.numerator, q.denominator)


def _from_sympy(x: Any) -> Fraction:
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


# --------------------------
# Polynomials in zeta
# --------------------------
def _qq_poly(coefficients: Iterable[Any]) -> sp.Poly:
    items = [as_rational(c) for c in coefficients]
    while items and items[-1] == 0:
        items.pop()
    if not items:
        return sp.Poly(0, ZETA, domain=QQ)
    return sp.Poly.from_list([_to_qq(c) for c in reversed(items)], ZETA, domain=QQ)


class PolyZ:
    """Polynomial in zeta over QQ; `coefficients` lists c_0, c_1, ... as Fractions."""
    __slots__ = ("poly", "_coefficients")

    def __init__(self, coefficients: Any = ()):
        if isinstance(coefficients, PolyZ):
            coefficients = coefficients.poly
        if isinstance(coefficients, sp.Poly):
            poly = coefficients if coefficients.get_domain() == QQ else coefficients.set_domain(QQ)
        else:
            poly = _qq_poly(coefficients)
        self.poly = poly
        self._coefficients: Optional[Tuple[Fraction, ...]] = None

    @classmethod
    def constant(cls, c: Any) -> "PolyZ":
        return cls((c,))

    @classmethod
    def one(cls) -> "PolyZ":
        return cls((1,))

    @classmethod
    def zeta(cls) -> "PolyZ":
        return cls((0, 1))

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        if self._coefficients is None:
            if self.poly.is_zero:
                self._coefficients = ()
            else:
                self._coefficients = tuple(_from_sympy(c) for c in reversed(self.poly.all_coeffs()))
        return self._coefficients

    @property
    def degree(self) -> float:
        # -inf for the zero polynomial
        return -math.inf if self.poly.is_zero else int(self.poly.degree())

    @property
    def leading(self) -> Fraction:
        return _from_sympy(self.poly.LC())

    def coeff(self, k: int) -> Fraction:
        cs = self.coefficients
        return cs[k] if 0 <= k < len(cs) else Fraction(0)

    def is_zero(self) -> bool:
        return bool(self.poly.is_zero)

    def is_constant(self) -> bool:
        return self.poly.is_zero or self.poly.degree() == 0

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PolyZ):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: Any) -> "PolyZ":
        return PolyZ(self.poly + _poly(other).poly)

    __radd__ = __add__

    def __neg__(self) -> "PolyZ":
        return PolyZ(-self.poly)

    def __sub__(self, other: Any) -> "PolyZ":
        return PolyZ(self.poly - _poly(other).poly)

    def __rsub__(self, other: Any) -> "PolyZ":
        return _poly(other) - self

    def __mul__(self, other: Any) -> "PolyZ":
        return PolyZ(self.poly * _poly(other).poly)

    __rmul__ = __mul__

    def scale(self, c: Any) -> "PolyZ":
        return PolyZ(self.poly.mul_ground(_to_qq(as_rational(c))))

    def divmod(self, other: "PolyZ") -> Tuple["PolyZ", "PolyZ"]:
        other = _poly(other)
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        q, r = self.poly.div(other.poly)
        return PolyZ(q), PolyZ(r)

    def monic(self) -> "PolyZ":
        if self.is_zero():
            return self
        return PolyZ(self.poly.monic())

    def evaluate(self, z: Any) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        q = as_rational(z)
        return _from_sympy(self.poly.eval(sp.Rational(q.numerator, q.denominator)))

    __call__ = evaluate

    def as_expr(self) -> sp.Expr:
        return self.poly.as_expr()

    def to_json(self) -> List[str]:
        return [format_rational(c) for c in self.coefficients]

    def format(self, var: str = "ζ") -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            if k == 0:
                terms.append(format_rational(c))
                continue
            mono = var if k == 1 else f"{var}^{k}"
            if c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{format_rational(c)}{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"PolyZ({self.format()})"


def _poly(value: Any) -> PolyZ:
    if isinstance(value, PolyZ):
        return value
    return PolyZ.constant(value)


def poly_gcd(a: PolyZ, b: PolyZ) -> PolyZ:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    return PolyZ(a.poly.gcd(b.poly)).monic()


# --------------------------
# Rational functions in zeta
# --------------------------
class RatFunZ:
    __slots__ = ("num", "den")

    def __init__(self, num: Any, den: Any = None):
        num = _poly(num)
        den = PolyZ.one() if den is None else _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("Rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = PolyZ(), PolyZ.one()
            return
        p, q = num.poly, den.poly
        if q.degree() > 0:
            _, p, q = p.cofactors(q)
        lead = q.LC()
        if lead != 1:
            p, q = p.quo_ground(lead), q.monic()
        self.num, self.den = PolyZ(p), PolyZ(q)

    @classmethod
    def zero(cls) -> "RatFunZ":
        return cls(PolyZ())

    @classmethod
    def one(cls) -> "RatFunZ":
        return cls(PolyZ.one())

    @classmethod
    def zeta(cls) -> "RatFunZ":
        return cls(PolyZ.zeta())

    @classmethod
    def from_expr(cls, expr: Any) -> "RatFunZ":
        """A sympy expression rational in zeta."""
        num, den = sp.fraction(sp.cancel(sp.sympify(expr)))
        return cls(PolyZ(sp.Poly(num, ZETA, domain=QQ)), PolyZ(sp.Poly(den, ZETA, domain=QQ)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.is_constant()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RatFunZ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: Any) -> "RatFunZ":
        other = _ratfun(other)
        if self.den == other.den:
            return RatFunZ(self.num + other.num, self.den)
        return RatFunZ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunZ":
        return RatFunZ(-self.num, self.den)

    def __sub__(self, other: Any) -> "RatFunZ":
        return self + (-_ratfun(other))

    def __rsub__(self, other: Any) -> "RatFunZ":
        return _ratfun(other) - self

    def __mul__(self, other: Any) -> "RatFunZ":
        other = _ratfun(other)
        return RatFunZ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "RatFunZ":
        other = _ratfun(other)
        if other.is_zero():
            raise ZeroDivisionError("Rational function division by zero")
        return RatFunZ(self.num * other.den, self.den * other.num)

    def evaluate(self, z: Any) -> Fraction:
        d = self.den.evaluate(z)
        if d == 0:
            raise ZeroDivisionError(f"Pole at {format_rational(as_rational(z))}")
        return self.num.evaluate(z) / d

    __call__ = evaluate

    def compose(self, inner: "RatFunZ") -> "RatFunZ":
        """self(inner(z)) as a rational function."""
        return _poly_at(self.num, inner) / _poly_at(self.den, inner)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def as_expr(self) -> sp.Expr:
        return self.num.as_expr() / self.den.as_expr()

    def to_json(self) -> Any:
        if self.is_polynomial():
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def format(self, var: str = "ζ") -> str:
        if self.is_polynomial():
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatFunZ({self.format()})"


def _ratfun(value: Any) -> RatFunZ:
    if isinstance(value, RatFunZ):
        return value
    return RatFunZ(_poly(value))


def _poly_at(p: PolyZ, r: RatFunZ) -> RatFunZ:
    acc = RatFunZ.zero()
    for c in reversed(p.coefficients):
        acc = acc * r + c
    return acc


def ratfun_eq(a: Any, b: Any) -> bool:
    """Identity of rational functions, by cross multiplication."""
    a, b = _ratfun(a), _ratfun(b)
    return (a.num * b.den - b.num * a.den).is_zero()


# --------------------------
# Matrices over Q(zeta)
# --------------------------
@dataclass(frozen=True)
class LaxMatrix:
    entries: Tuple[Tuple[RatFunZ, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_ratfun(e) for e in row) for row in self.entries)
        d = len(rows)
        if d == 0 or any(len(row) != d for row in rows):
            raise DimensionMismatch("Lax matrix must be square and non-empty")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, d: int) -> "LaxMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "LaxMatrix":
        d = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> RatFunZ:
        i, j = ij
        return self.entries[i][j]

    def map(self, fn) -> "LaxMatrix":
        return LaxMatrix(tuple(tuple(fn(e) for e in row) for row in self.entries))

    def scale(self, c: Any) -> "LaxMatrix":
        c = _ratfun(c)
        return self.map(lambda e: e * c)

    def __add__(self, other: "LaxMatrix") -> "LaxMatrix":
        _same_dim(self, other)
        return LaxMatrix(tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def __sub__(self, other: "LaxMatrix") -> "LaxMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "LaxMatrix") -> "LaxMatrix":
        return mat_mul(self, other)

    def trace(self) -> RatFunZ:
        acc = RatFunZ.zero()
        for k in range(self.dim):
            acc = acc + self.entries[k][k]
        return acc

    def is_polynomial(self) -> bool:
        return all(e.is_polynomial() for row in self.entries for e in row)

    def to_domain_matrix(self) -> DomainMatrix:
        """The same matrix as a sympy DomainMatrix over QQ(zeta)."""
        rows = [[QQ_ZETA.from_sympy(e.as_expr()) for e in row] for row in self.entries]
        return DomainMatrix(rows, (self.dim, self.dim), QQ_ZETA)

    def to_json(self) -> List[List[Any]]:
        return [[e.to_json() for e in row] for row in self.entries]

    def format(self, var: str = "ζ") -> str:
        return "[" + "; ".join(", ".join(e.format(var) for e in row) for row in self.entries) + "]"


def _same_dim(a: LaxMatrix, b: LaxMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"Dimension mismatch: {a.dim} vs {b.dim}")


def mat_mul(a: LaxMatrix, b: LaxMatrix) -> LaxMatrix:
    _same_dim(a, b)
    d = a.dim
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = RatFunZ.zero()
            for k in range(d):
                x, y = a.entries[i][k], b.entries[k][j]
                if x.is_zero() or y.is_zero():
                    continue
                acc = acc + x * y
            row.append(acc)
        rows.append(tuple(row))
    return LaxMatrix(tuple(rows))


def mat_product(factors: Sequence[LaxMatrix]) -> LaxMatrix:
    """factors[0] @ factors[1] @ ... (left to right)."""
    if not factors:
        raise DimensionMismatch("Empty matrix product")
    out = factors[0]
    for m in factors[1:]:
        out = mat_mul(out, m)
    return out


# --------------------------
# Characteristic polynomial
# --------------------------
@dataclass(frozen=True)
class CharPoly:
    """det(M - lambda I) = sum c_k lambda^k; clearing_factor is 1 unless poles were cleared."""
    coefficients: Tuple[RatFunZ, ...]
    clearing_factor: PolyZ = field(default_factory=PolyZ.one)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def determinant(self) -> RatFunZ:
        return self.coefficients[0]

    @property
    def trace(self) -> RatFunZ:
        d = self.degree
        c = self.coefficients[d - 1]
        return c if (d + 1) % 2 == 0 else -c

    def with_clearing(self, factor: PolyZ) -> "CharPoly":
        return CharPoly(self.coefficients, factor)

    def to_json(self) -> dict:
        return {
            "coefficients": [c.to_json() for c in self.coefficients],
            "clearing_factor": self.clearing_factor.to_json(),
        }

    def format(self, var: str = "ζ", eig: str = "λ") -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            mono = "" if k == 0 else (eig if k == 1 else f"{eig}^{k}")
            parts.append(f"({c.format(var)}){mono}")
        return " + ".join(parts) if parts else "0"


def _direct(m: LaxMatrix) -> List[RatFunZ]:
    # DomainMatrix.charpoly is det(lambda I - M), highest power first
    d = m.dim
    monic = m.to_domain_matrix().charpoly()
    sign = -1 if d % 2 else 1
    return [RatFunZ.from_expr(QQ_ZETA.to_sympy(monic[d - k])) * sign for k in range(d + 1)]


def _trace_recurrence(m: LaxMatrix) -> List[RatFunZ]:
    # Faddeev-LeVerrier for det(lambda I - M), then the sign flip to det(M - lambda I)
    d = m.dim
    a: List[Optional[RatFunZ]] = [None] * (d + 1)
    a[d] = RatFunZ.one()
    eye = LaxMatrix.identity(d)
    m_k = LaxMatrix(tuple(tuple(0 for _ in range(d)) for _ in range(d)))
    for k in range(1, d + 1):
        m_k = mat_mul(m, m_k) + eye.scale(a[d - k + 1])
        a[d - k] = -(mat_mul(m, m_k).trace() * Fraction(1, k))
    sign = -1 if d % 2 else 1
    return [c * sign for c in a]


def char_poly(m: LaxMatrix, max_dim: Optional[int] = None, method: Optional[str] = None) -> CharPoly:
    """
    Coefficients of det(M - lambda I) over Q(zeta).
    Direct DomainMatrix.charpoly up to YB_DIRECT_EXPANSION_MAX_DIM, trace recurrence above;
    `method` ("direct" | "trace") forces one of them.
    """
    limit = settings.YB_CHARPOLY_MAX_DIM if max_dim is None else max_dim
    if m.dim > limit:
        raise DimensionMismatch(f"char_poly supports dim <= {limit}, got {m.dim}")
    if method is None:
        method = "direct" if m.dim <= settings.YB_DIRECT_EXPANSION_MAX_DIM else "trace"
    if method == "direct":
        coefficients = _direct(m)
    elif method == "trace":
        coefficients = _trace_recurrence(m)
    else:
        raise ValueError(f"Unknown char_poly method: {method}")
    return CharPoly(tuple(coefficients))
