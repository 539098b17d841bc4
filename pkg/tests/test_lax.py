from fractions import Fraction

import pytest

from ybmaps.api.algebra import LaxMatrix, PolyZ, RatFunZ, char_poly, mat_mul
from ybmaps.api.errors import ConfigError, KindMismatch, NotFactorizable
from ybmaps.api.lax import (
    clearing_factor,
    dressing_A,
    get_family,
    kdv_A,
    matrices_equal,
    monodromy,
    refactor_check,
    refactor_solve_dressing,
    spectral_invariants,
)
from ybmaps.api.maps import ADLER, IDENTITY, KDV, DressingSite, KdvSite, adler_R, get_map
from ybmaps.api.sampling import sample_states
from ybmaps.api.ybcore import ScalarSite, TupleState, apply_omega, apply_Ti, run_batch

DRESSING = get_family("dressing")


def lin(a, b) -> RatFunZ:
    return RatFunZ(PolyZ((a, b)))


def const(c) -> RatFunZ:
    return RatFunZ(PolyZ((c,)))


def samples(name, n, count, seed, d=2):
    entry = get_map(name)
    return sample_states(entry.sampler, n, count, seed, d=d, distinct=entry.distinct)


# --------------------------
# Families
# --------------------------
def test_dressing_A_examples():
    assert dressing_A(DressingSite(0, 0)) == LaxMatrix(((0, 1), (lin(0, -1), 0)))
    assert dressing_A(DressingSite(1, 3)) == LaxMatrix(((1, 1), (lin(4, -1), 1)))


def test_dressing_determinant():
    for f, beta in ((0, 0), (1, 3), (Fraction(-5, 2), Fraction(7, 3))):
        assert char_poly(dressing_A(DressingSite(f, beta))).determinant == lin(-beta, 1)


def test_kdv_A_examples():
    assert kdv_A(KdvSite((1, 2), (3, 1), 0)) == LaxMatrix.identity(2)
    a = kdv_A(KdvSite((1, 0), (1, 0), 1))
    assert a[0, 0] == RatFunZ(PolyZ((1, 1)), PolyZ((-1, 1)))
    assert a[1, 1] == const(1) and a[0, 1].is_zero()


@pytest.mark.parametrize("site", [KdvSite((1, 0), (1, 1), 2), KdvSite((1, -2, 3), (2, 1, 1), Fraction(-3, 4))])
def test_kdv_determinant(site):
    lam = site.lam
    det = char_poly(kdv_A(site)).determinant
    assert det == RatFunZ(PolyZ((lam, 1)), PolyZ((-lam, 1)))


def test_family_registry():
    assert get_family("kdv", d=3).dim == 3
    with pytest.raises(ConfigError):
        get_family("toda")
    with pytest.raises(KindMismatch):
        DRESSING(ScalarSite(1))


# --------------------------
# Monodromy
# --------------------------
def test_monodromy_single_factor():
    s = TupleState((DressingSite(1, 3),))
    m = monodromy(DRESSING, s)
    assert m.matrix == dressing_A(DressingSite(1, 3)) and m.factor_count == 1


def test_monodromy_dressing_fixture():
    m = monodromy(DRESSING, TupleState((DressingSite(1, 3), DressingSite(2, 1)))).matrix
    assert m[0, 1] == const(3)
    assert m[1, 1] == lin(7, -1)


def test_spectral_invariants_dressing_fixture():
    cp = spectral_invariants(DRESSING, TupleState((DressingSite(1, 3), DressingSite(2, 1))))
    assert cp.trace == lin(13, -2)
    assert cp.determinant == RatFunZ(PolyZ((-3, 1)) * PolyZ((-1, 1)))
    assert cp.clearing_factor == PolyZ.one()


def test_spectral_invariants_single_site():
    site = DressingSite(2, 5)
    cp = spectral_invariants(DRESSING, TupleState((site,)))
    assert cp == char_poly(dressing_A(site))


def test_kdv_clearing_factor():
    s = TupleState((KdvSite((1, 0), (1, 1), 2), KdvSite((0, 1), (1, 1), 1)))
    family = get_family("kdv", d=2)
    factor = clearing_factor(family, s)
    assert factor == PolyZ((-2, 1)) * PolyZ((-1, 1))
    cp = spectral_invariants(family, s)
    assert cp.clearing_factor == factor
    assert all(c.is_polynomial() for c in cp.coefficients)


@pytest.mark.parametrize("name,family", [("adler", "dressing"), ("kdv", "kdv")])
def test_spectrum_invariant_under_cyclic_shift(name, family):
    fam = get_family(family, d=2)
    for s in samples(name, 3, 10, 31):
        assert spectral_invariants(fam, s) == spectral_invariants(fam, apply_omega(s))


@pytest.mark.parametrize("name,family,n", [
    ("adler", "dressing", 2), ("adler", "dressing", 3), ("adler", "dressing", 4),
    ("kdv", "kdv", 2), ("kdv", "kdv", 3), ("kdv", "kdv", 4),
])
def test_monodromy_maps_preserve_spectrum(name, family, n):
    fam = get_family(family, d=2)
    m = get_map(name).ybmap

    def conserved(s):
        base = spectral_invariants(fam, s)
        return all(spectral_invariants(fam, apply_Ti(m, s, i)) == base for i in range(1, n + 1))

    batch = run_batch(conserved, samples(name, n, 10, 37))
    assert batch.counts["fail"] == 0 and batch.counts["pass"] >= 8


# --------------------------
# Refactorization
# --------------------------
def test_refactor_dressing_fixture():
    assert refactor_check(DRESSING, ADLER, DressingSite(1, 3), DressingSite(2, 1))


def test_refactor_identity_on_equal_sites():
    x = DressingSite(Fraction(1, 2), 4)
    assert refactor_check(DRESSING, IDENTITY, x, x)


def test_refactor_kdv_fixture():
    family = get_family("kdv", d=2)
    assert refactor_check(family, KDV, KdvSite((1, 0), (1, 1), 2), KdvSite((0, 1), (1, 1), 1))


def test_refactor_kind_mismatch():
    with pytest.raises(KindMismatch):
        refactor_check(DRESSING, KDV, KdvSite((1, 0), (1, 1), 2), KdvSite((0, 1), (1, 1), 1))


def test_refactor_dressing_batch():
    batch = run_batch(lambda s: refactor_check(DRESSING, ADLER, *s.sites), samples("adler", 2, 500, 41))
    assert batch.counts["fail"] == 0 and batch.counts["pass"] > 480


@pytest.mark.parametrize("d", [2, 3])
def test_refactor_kdv_batch(d):
    family = get_family("kdv", d=d)
    batch = run_batch(lambda s: refactor_check(family, KDV, *s.sites), samples("kdv", 2, 200, 43, d=d))
    assert batch.counts["fail"] == 0 and batch.counts["pass"] > 180


def test_solve_dressing_fixture():
    l = mat_mul(dressing_A(DressingSite(2, 1)), dressing_A(DressingSite(1, 3)))
    x1, x2 = refactor_solve_dressing(l, 3, 1)
    assert (x1.f, x2.f) == (Fraction(4, 3), Fraction(5, 3))
    assert (x1.beta, x2.beta) == (3, 1)


def test_solve_dressing_equal_parameters():
    a = dressing_A(DressingSite(Fraction(3, 2), 2))
    x1, x2 = refactor_solve_dressing(mat_mul(a, a), 2, 2)
    assert x1.f == x2.f == Fraction(3, 2)


def test_solve_dressing_not_factorizable():
    l = mat_mul(dressing_A(DressingSite(-1, 2)), dressing_A(DressingSite(1, 3)))
    with pytest.raises(NotFactorizable):
        refactor_solve_dressing(l, 3, 2)
    with pytest.raises(NotFactorizable):
        refactor_solve_dressing(LaxMatrix.identity(2), 0, 0)


def test_solve_dressing_reproduces_adler():
    def check(s):
        x, y = s.sites
        expected = adler_R(x, y)
        split = refactor_solve_dressing(mat_mul(dressing_A(y), dressing_A(x)), x.beta, y.beta)
        return split == expected

    batch = run_batch(check, samples("adler", 2, 500, 47))
    assert batch.counts["fail"] == 0 and batch.counts["pass"] > 480


def test_matrices_equal():
    a = dressing_A(DressingSite(1, 3))
    assert matrices_equal(a, a)
    assert not matrices_equal(a, dressing_A(DressingSite(1, 2)))
