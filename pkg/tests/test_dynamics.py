import math
from fractions import Fraction

import pytest

from ybmaps.api.dynamics import (
    Orbit,
    commuting_flow_scan,
    conservation_report,
    height_series,
    iterate,
    orbit_distinct,
    orbit_period,
    state_height,
)
from ybmaps.api.lax import get_family
from ybmaps.api.maps import ADLER, IDENTITY, KDV, SUMLEFT, DressingSite, KdvSite
from ybmaps.api.ybcore import ScalarSite, TupleState

DRESSING = get_family("dressing")
ADLER_TRIPLE = TupleState((DressingSite(1, 3), DressingSite(2, 1), DressingSite(1, 2)))


# --------------------------
# Orbits
# --------------------------
def test_zero_steps():
    orbit = iterate(ADLER, ADLER_TRIPLE, 1, 0)
    assert orbit.states == [ADLER_TRIPLE] and not orbit.truncated


def test_negative_steps():
    with pytest.raises(ValueError):
        iterate(ADLER, ADLER_TRIPLE, 1, -1)


def test_two_site_orbit_has_period_two():
    s = TupleState((DressingSite(1, 3), DressingSite(2, 1)))
    orbit = iterate(ADLER, s, 1, 6)
    assert len(orbit) == 7
    assert orbit_period(orbit) == 2
    assert not orbit_distinct(orbit)


def test_three_site_orbit_is_aperiodic_and_conserved():
    orbit = iterate(ADLER, ADLER_TRIPLE, 1, 50)
    assert len(orbit) == 51 and not orbit.truncated
    assert orbit_distinct(orbit)
    assert orbit_period(orbit) is None
    report = conservation_report(DRESSING, orbit)
    assert report.conserved and report.first_divergence is None


def test_orbit_truncates_at_singularity():
    s = TupleState((DressingSite(1, 0), DressingSite(-1, 5)))
    orbit = iterate(ADLER, s, 1, 5)
    assert orbit.states == [s]
    assert orbit.truncated_at == 1
    assert "R_12" in orbit.truncation_reason


# --------------------------
# Conservation
# --------------------------
def test_single_state_is_conserved():
    orbit = Orbit("adler", 3, 1, [ADLER_TRIPLE])
    assert conservation_report(DRESSING, orbit).conserved


@pytest.mark.parametrize("n", [3, 4])
def test_dressing_invariants_conserved(n):
    sites = [DressingSite(1, 3), DressingSite(2, 1), DressingSite(1, 2), DressingSite(Fraction(1, 2), -1)][:n]
    orbit = iterate(ADLER, TupleState(tuple(sites)), 1, 30)
    report = conservation_report(DRESSING, orbit)
    assert not orbit.truncated
    assert report.conserved


def test_kdv_invariants_conserved():
    s = TupleState((KdvSite((1, 0), (1, 1), 2), KdvSite((0, 1), (1, 1), 1), KdvSite((1, 1), (2, -1), -1)))
    orbit = iterate(KDV, s, 1, 20)
    report = conservation_report(get_family("kdv", d=2), orbit)
    assert not orbit.truncated
    assert report.conserved


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_dressing_invariants_conserved_over_100_steps(n):
    sites = [DressingSite(1, 3), DressingSite(2, 1), DressingSite(1, 2), DressingSite(Fraction(1, 2), -1)][:n]
    orbit = iterate(ADLER, TupleState(tuple(sites)), 1, 100)
    assert len(orbit) == 101
    assert conservation_report(DRESSING, orbit).conserved


@pytest.mark.slow
def test_kdv_invariants_conserved_over_100_steps():
    s = TupleState((KdvSite((1, 0), (1, 1), 2), KdvSite((0, 1), (1, 1), 1), KdvSite((1, 1), (2, -1), -1)))
    orbit = iterate(KDV, s, 1, 100)
    assert len(orbit) == 101
    assert conservation_report(get_family("kdv", d=2), orbit).conserved


def test_perturbed_orbit_is_flagged():
    orbit = iterate(ADLER, ADLER_TRIPLE, 1, 6)
    x1 = orbit.states[3].site(1)
    orbit.states[3] = orbit.states[3].replace({1: DressingSite(x1.f + 1, x1.beta)})
    report = conservation_report(DRESSING, orbit)
    assert not report.conserved
    assert report.first_divergence == 3


# --------------------------
# Heights
# --------------------------
def test_state_height():
    s = TupleState((ScalarSite(Fraction(255, 4)), ScalarSite(0)))
    assert state_height(s) == 8
    assert state_height(TupleState((ScalarSite(0),))) == 1


def test_constant_orbit_has_constant_heights():
    s = TupleState((ScalarSite(Fraction(3, 7)), ScalarSite(12), ScalarSite(-1)))
    series = height_series(iterate(IDENTITY, s, 1, 10))
    assert len(set(series.heights)) == 1
    assert len(series.heights) == 11
    assert abs(series.log_slope) < 1e-9


def test_adler_height_series():
    orbit = iterate(ADLER, ADLER_TRIPLE, 1, 100)
    series = height_series(orbit)
    assert len(series.heights) == len(orbit) == 101
    assert all(h >= 1 for h in series.heights)
    assert series.window_start == 50
    assert series.log_slope is not None and math.isfinite(series.log_slope)
    assert series.loglog_slope is not None and math.isfinite(series.loglog_slope)


@pytest.mark.slow
def test_adler_height_series_over_200_steps():
    orbit = iterate(ADLER, ADLER_TRIPLE, 1, 200)
    series = height_series(orbit)
    assert len(series.heights) == 201
    assert series.window_start == 100
    assert series.heights[-1] > series.heights[100] > series.heights[0]
    assert math.isfinite(series.log_slope) and math.isfinite(series.loglog_slope)


# --------------------------
# Path independence
# --------------------------
def test_adler_flows_are_path_independent():
    report = commuting_flow_scan(ADLER, ADLER_TRIPLE, (1, 2), 4)
    assert report.words_checked == 2 + 4 + 8 + 16
    assert report.path_independent
    assert report.skipped == 0


def test_sumleft_flows_depend_on_path():
    s = TupleState((ScalarSite(1), ScalarSite(1), ScalarSite(1)))
    report = commuting_flow_scan(SUMLEFT, s, (1, 2), 2)
    assert not report.path_independent
    assert ("T1T2", "T2T1") in report.mismatches
