import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from ybmaps.api.algebra import (
    ZETA as Z,
    LaxMatrix,
    PolyZ,
    RatFunZ,
    as_rational,
    char_poly,
    format_rational,
    mat_mul,
    mat_product,
    poly_gcd,
    ratfun_eq,
)
from ybmaps.api.errors import DimensionMismatch

ZETA = PolyZ.zeta()
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)


def lin(a, b) -> RatFunZ:
    """a + b zeta"""
    return RatFunZ(PolyZ((a, b)))


def dressing(f, beta) -> LaxMatrix:
    f = Fraction(f)
    return LaxMatrix(((f, 1), (lin(f * f + beta, -1), f)))


# --------------------------
# Rationals and polynomials
# --------------------------
def test_rational_parsing_and_format():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(4) == Fraction(4)
    assert format_rational(Fraction(4, 1)) == "4"
    assert format_rational(Fraction(-2, 6)) == "-1/3"
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("one half")


def test_zero_polynomial_is_empty():
    assert PolyZ((0, 0)).coefficients == ()
    assert PolyZ().degree == -math.inf
    assert (ZETA - ZETA).is_zero()


def test_polynomial_divmod_and_gcd():
    p = PolyZ((-1, 0, 1))  # zeta^2 - 1
    q, r = p.divmod(PolyZ((-1, 1)))
    assert q == PolyZ((1, 1)) and r.is_zero()
    assert poly_gcd(p, PolyZ((2, 2))) == PolyZ((1, 1))
    with pytest.raises(ZeroDivisionError):
        p.divmod(PolyZ())


def test_polynomial_format():
    assert PolyZ((13, -2)).format() == "13 - 2ζ"
    assert PolyZ((3, -4, 1)).format() == "3 - 4ζ + ζ^2"
    assert PolyZ().format() == "0"


# --------------------------
# Rational functions
# --------------------------
def test_ratfun_canonical_form():
    r = RatFunZ(PolyZ((-1, 0, 1)), PolyZ((-2, 2)))
    assert r.num == PolyZ((Fraction(1, 2), Fraction(1, 2)))
    assert r.den == PolyZ.one()
    s = RatFunZ(PolyZ((4,)), PolyZ((-2, 2)))
    assert s.den == PolyZ((-1, 1)) and s.num == PolyZ((2,))


def test_ratfun_eq_examples():
    assert ratfun_eq(RatFunZ(PolyZ((-1, 0, 1)), PolyZ((-1, 1))), RatFunZ(PolyZ((1, 1))))
    lam = Fraction(1)
    assert ratfun_eq(RatFunZ(PolyZ((2 * lam,)), PolyZ((-lam, 1))), RatFunZ(PolyZ((2,)), PolyZ((-1, 1))))
    assert not ratfun_eq(lin(13, -2), lin(13, -3))


def test_ratfun_pole_and_compose():
    r = RatFunZ(PolyZ((1,)), PolyZ((-1, 1)))
    with pytest.raises(ZeroDivisionError):
        r.evaluate(1)
    assert r.evaluate(3) == Fraction(1, 2)
    square = RatFunZ(PolyZ((0, 0, 1)))
    shift = RatFunZ(PolyZ((1, 1)))
    assert square.compose(shift) == RatFunZ(PolyZ((1, 2, 1)))
    assert shift.compose(square) == RatFunZ(PolyZ((1, 0, 1)))


def test_ratfun_from_sympy_expression():
    assert RatFunZ.from_expr((Z**2 - 1) / (Z - 1)) == RatFunZ(PolyZ((1, 1)))
    r = RatFunZ.from_expr(4 / (2 * Z - 2))
    assert r.num == PolyZ((2,)) and r.den == PolyZ((-1, 1))
    assert sp.simplify(r.as_expr() - 2 / (Z - 1)) == 0


@settings(max_examples=60, deadline=None)
@given(rationals, rationals)
def test_field_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a
    x, y = lin(a, 1), lin(b, -1)
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x * y) / y == x


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_canonicalization_is_idempotent(a, b, c):
    q = Fraction(a)
    assert Fraction(q.numerator, q.denominator) == q
    p = PolyZ((a, b, c, 0))
    assert PolyZ(p.coefficients) == p
    den = PolyZ((c, 1)) * PolyZ((b, 2))
    r = RatFunZ(PolyZ((a, 1)) * PolyZ((c, 1)), den)
    assert RatFunZ(r.num, r.den) == r
    assert r.den.leading == 1


# --------------------------
# Matrices
# --------------------------
def test_mat_mul_identity_and_dimension():
    a = dressing(1, 3)
    assert mat_mul(LaxMatrix.identity(2), a) == a
    with pytest.raises(DimensionMismatch):
        mat_mul(a, LaxMatrix.identity(3))
    with pytest.raises(DimensionMismatch):
        LaxMatrix(((1, 2),))


def test_dressing_product_entries():
    m = mat_mul(dressing(2, 1), dressing(1, 3))
    assert m[0, 1] == RatFunZ(PolyZ((3,)))
    assert m[1, 1] == lin(7, -1)
    assert m[0, 0] == lin(6, -1)
    assert m[1, 0] == lin(13, -3)


@settings(max_examples=25, deadline=None)
@given(st.lists(rationals, min_size=27, max_size=27))
def test_mat_mul_is_associative(vals):
    def mat(offset, d):
        return LaxMatrix(tuple(
            tuple(lin(vals[offset + i * d + j], vals[(offset + i + j) % 27]) for j in range(d)) for i in range(d)
        ))
    for d in (2, 3):
        a, b, c = mat(0, d), mat(9, d), mat(18, d)
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


# --------------------------
# Characteristic polynomial
# --------------------------
def test_char_poly_identity():
    cp = char_poly(LaxMatrix.identity(2))
    assert cp.coefficients == (RatFunZ(PolyZ((1,))), RatFunZ(PolyZ((-2,))), RatFunZ(PolyZ((1,))))
    assert cp.trace == RatFunZ(PolyZ((2,)))


def test_char_poly_diagonal():
    r1, r2 = lin(1, 1), lin(-3, 2)
    cp = char_poly(LaxMatrix.diagonal([r1, r2]))
    assert cp.coefficients == (r1 * r2, -(r1 + r2), RatFunZ.one())


def test_char_poly_of_dressing_product():
    cp = char_poly(mat_mul(dressing(2, 1), dressing(1, 3)))
    assert cp.trace == lin(13, -2)
    assert cp.determinant == RatFunZ(PolyZ((-3, 1)) * PolyZ((-1, 1)))
    assert cp.coefficients[2] == RatFunZ.one()


def test_char_poly_leading_sign():
    cp = char_poly(LaxMatrix.identity(3))
    assert cp.coefficients[3] == RatFunZ(PolyZ((-1,)))


def test_char_poly_methods_agree():
    m = LaxMatrix((
        (lin(1, 1), 2, lin(0, -1)),
        (Fraction(1, 2), lin(3, 0), 1),
        (lin(-1, 2), 4, lin(2, 1)),
    ))
    assert char_poly(m, method="direct") == char_poly(m, method="trace")


def test_char_poly_trace_recurrence_above_direct_bound():
    vals = [lin(k, 1) for k in range(5)]
    cp = char_poly(LaxMatrix.diagonal(vals))
    expected = [RatFunZ.one()]
    for v in vals:
        # multiply by (v - lambda)
        nxt = [RatFunZ.zero()] * (len(expected) + 1)
        for k, c in enumerate(expected):
            nxt[k] = nxt[k] + c * v
            nxt[k + 1] = nxt[k + 1] - c
        expected = nxt
    assert list(cp.coefficients) == expected


def test_char_poly_dimension_bound():
    with pytest.raises(DimensionMismatch):
        char_poly(LaxMatrix.identity(7))
    with pytest.raises(DimensionMismatch):
        char_poly(LaxMatrix.identity(3), max_dim=2)


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=8, max_size=8))
def test_char_poly_is_cyclic(vals):
    a = LaxMatrix(((lin(vals[0], 1), vals[1]), (vals[2], lin(vals[3], -1))))
    b = LaxMatrix(((vals[4], lin(vals[5], 2)), (lin(vals[6], 0), vals[7])))
    assert char_poly(mat_mul(a, b)) == char_poly(mat_mul(b, a))


def test_char_poly_matches_sympy_determinant():
    m = mat_product([dressing(1, 2), dressing(2, 1), dressing(1, 3)])
    cp = char_poly(m)
    assert cp.determinant == RatFunZ(PolyZ((-6, 11, -6, 1)))
    assert cp.coefficients[1] == lin(-35, 8)
    lam = sp.Symbol("lam")
    shifted = sp.Matrix(2, 2, lambda i, j: m[i, j].as_expr()) - lam * sp.eye(2)
    expected = sp.Poly(sp.expand(shifted.det()), lam)
    for k, c in enumerate(cp.coefficients):
        assert sp.expand(c.as_expr() - expected.coeff_monomial(lam**k)) == 0
