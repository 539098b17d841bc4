# api/dynamics.py
"""
Orbits of the monodromy maps and what is measured along them.

Key behavior:
- iterate T_i from a start state, stopping (not failing) at the first singular step
- conservation_report: spectral invariants per state, first step that differs from step 0
- height_series: max bit-length per state plus least-squares slopes on the last half
- commuting_flow_scan: every word in the chosen T's up to a depth; words with the same
  letter counts must land on the same state
"""
from __future__ import annotations
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ybmaps.api.algebra import CharPoly, bit_height
from ybmaps.api.errors import KindMismatch, SingularInput
from ybmaps.api.lax import LaxFamily, spectral_invariants
from ybmaps.api.ybcore import TupleState, YBMap, apply_Ti, apply_word

log = logging.getLogger(__name__)


# --------------------------
# Orbits
# --------------------------
@dataclass
class Orbit:
    map_name: str
    n: int
    generator: int
    states: List[TupleState]
    requested_steps: int = 0
    truncated_at: Optional[int] = None  # step whose computation hit a singularity
    truncation_reason: str = ""

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None

    def __len__(self) -> int:
        return len(self.states)


def iterate(m: YBMap, s: TupleState, i: int, steps: int) -> Orbit:
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    orbit = Orbit(m.name, s.n, i, [s], requested_steps=steps)
    current = s
    for k in range(1, steps + 1):
        try:
            current = apply_Ti(m, current, i)
        except SingularInput as e:
            orbit.truncated_at = k
            orbit.truncation_reason = str(e)
            log.debug("orbit of %s truncated at step %d: %s", m.name, k, e)
            break
        orbit.states.append(current)
    return orbit


def orbit_period(orbit: Orbit) -> Optional[int]:
    """Least k > 0 with state_k = state_0 within the orbit, else None."""
    start = orbit.states[0]
    for k in range(1, len(orbit.states)):
        if orbit.states[k].same_state(start):
            return k
    return None


def orbit_distinct(orbit: Orbit) -> bool:
    states = orbit.states
    for a in range(len(states)):
        for b in range(a + 1, len(states)):
            if states[a].same_state(states[b]):
                return False
    return True


# --------------------------
# Conservation
# --------------------------
@dataclass
class InvariantReport:
    invariants: List[Optional[CharPoly]]
    errors: Dict[int, str] = field(default_factory=dict)
    first_divergence: Optional[int] = None

    @property
    def conserved(self) -> bool:
        return self.first_divergence is None and not self.errors


def conservation_report(family: LaxFamily, orbit: Orbit) -> InvariantReport:
    if orbit.states and orbit.states[0].kind != family.kind:
        raise KindMismatch(f"Orbit of {orbit.states[0].kind} sites, family '{family.name}' takes {family.kind}")
    report = InvariantReport(invariants=[])
    reference: Optional[CharPoly] = None
    for k, s in enumerate(orbit.states):
        try:
            cp = spectral_invariants(family, s)
        except SingularInput as e:
            report.invariants.append(None)
            report.errors[k] = str(e)
            continue
        report.invariants.append(cp)
        if reference is None:
            reference = cp
        elif report.first_divergence is None and cp != reference:
            report.first_divergence = k
            log.info("invariants of %s diverge at step %d", family.name, k)
    return report


# --------------------------
# Heights
# --------------------------
def state_height(s: TupleState) -> int:
    return max([1] + [bit_height(c) for c in s.components()])


@dataclass
class HeightSeries:
    heights: List[int]
    window_start: int
    log_slope: Optional[float]  # d log h / d k
    loglog_slope: Optional[float]  # d log log h / d log k


def _slope(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    if len(xs) < 2 or len(set(xs)) < 2:
        return None
    return float(np.polyfit(np.asarray(xs, dtype=float), np.asarray(ys, dtype=float), 1)[0])


def height_series(orbit: Orbit) -> HeightSeries:
    if not orbit.states:
        raise ValueError("height_series needs a non-empty orbit")
    heights = [state_height(s) for s in orbit.states]
    start = len(heights) // 2
    window = list(range(start, len(heights)))
    log_slope = _slope(window, [math.log(heights[k]) for k in window])
    usable = [k for k in window if k >= 1 and heights[k] >= 2]
    loglog_slope = _slope(
        [math.log(k) for k in usable],
        [math.log(math.log(heights[k])) for k in usable],
    )
    return HeightSeries(heights, start, log_slope, loglog_slope)


# --------------------------
# Path independence
# --------------------------
@dataclass
class FlowScanReport:
    generators: Tuple[int, ...]
    depth: int
    words_checked: int = 0
    classes: int = 0
    skipped: int = 0
    mismatches: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def path_independent(self) -> bool:
        return not self.mismatches


def word_label(word: Sequence[int]) -> str:
    return "".join(f"T{i}" for i in word) or "Id"


def commuting_flow_scan(
    m: YBMap,
    s: TupleState,
    generators: Sequence[int] = (1, 2),
    depth: int = 4,
) -> FlowScanReport:
    report = FlowScanReport(tuple(generators), depth)
    for length in range(1, depth + 1):
        classes: Dict[Tuple[Tuple[int, int], ...], List[Tuple[str, TupleState]]] = {}
        for word in product(generators, repeat=length):
            try:
                end = apply_word(m, s, word)
            except SingularInput as e:
                report.skipped += 1
                log.debug("word %s skipped: %s", word_label(word), e)
                continue
            report.words_checked += 1
            key = tuple(sorted(Counter(word).items()))
            classes.setdefault(key, []).append((word_label(word), end))
        for members in classes.values():
            report.classes += 1
            first_label, first_end = members[0]
            for label, end in members[1:]:
                if not end.same_state(first_end):
                    report.mismatches.append((first_label, label))
    return report
