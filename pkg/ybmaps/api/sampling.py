# api/sampling.py
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, List, Optional, Tuple

from ybmaps import settings
from ybmaps.api.ybcore import Site, TupleState

SiteSampler = Callable[[random.Random, "SampleBox", int], Site]


@dataclass(frozen=True)
class SampleBox:
    """Numerators in [-num, num], denominators in [1, den]."""
    num: int = settings.YB_NUM_BOX
    den: int = settings.YB_DEN_BOX


def random_rational(rng: random.Random, box: SampleBox) -> Fraction:
    return Fraction(rng.randint(-box.num, box.num), rng.randint(1, box.den))


def random_vector(rng: random.Random, box: SampleBox, d: int) -> Tuple[Fraction, ...]:
    return tuple(random_rational(rng, box) for _ in range(d))


def _draw_state(
    site_sampler: SiteSampler,
    rng: random.Random,
    box: SampleBox,
    n: int,
    d: int,
    distinct: Optional[Callable[[Site], Any]],
) -> TupleState:
    sites: List[Site] = []
    seen = set()
    while len(sites) < n:
        site = site_sampler(rng, box, d)
        if distinct is not None:
            key = distinct(site)
            if key in seen:
                continue
            seen.add(key)
        sites.append(site)
    return TupleState(tuple(sites))


def sample_states(
    site_sampler: SiteSampler,
    n: int,
    count: int,
    seed: int,
    d: int = 2,
    box: SampleBox = SampleBox(),
    distinct: Optional[Callable[[Site], Any]] = None,
) -> List[TupleState]:
    """
    `count` seeded states of n sites; same arguments, same list.
    With `distinct`, a site whose key repeats one already in its state is redrawn.
    """
    rng = random.Random(seed)
    return [_draw_state(site_sampler, rng, box, n, d, distinct) for _ in range(count)]
