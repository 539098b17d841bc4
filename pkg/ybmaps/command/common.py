# command/common.py
from typing import Dict, List, Optional

from ybmaps.api.errors import ConfigError
from ybmaps.api.lax import LaxFamily, get_family
from ybmaps.api.literals import format_state, parse_state
from ybmaps.api.maps import MapEntry, get_map
from ybmaps.api.report import RunConfig
from ybmaps.api.sampling import sample_states
from ybmaps.api.ybcore import BatchResult, TupleState


def resolve_map(config: RunConfig) -> MapEntry:
    if not config.map:
        raise ConfigError("--map is required")
    if config.pair and config.map != "lyubashenko":
        raise ConfigError("--pair only applies to --map lyubashenko")
    return get_map(config.map, pair=config.pair)


def resolve_family(config: RunConfig, entry: MapEntry) -> LaxFamily:
    name = config.family or entry.family
    if name is None:
        raise ConfigError(f"Map '{entry.ybmap.name}' has no Lax family; pass --family")
    family = get_family(name, d=config.d)
    if family.kind != entry.site_kind:
        raise ConfigError(f"Family '{family.name}' ({family.kind}) does not fit map '{entry.ybmap.name}' ({entry.site_kind})")
    return family


def check_counts(config: RunConfig) -> None:
    if config.n < 2:
        raise ConfigError(f"--n must be >= 2, got {config.n}")
    if config.d < 1:
        raise ConfigError(f"--d must be >= 1, got {config.d}")
    if config.steps < 0:
        raise ConfigError(f"--steps must be >= 0, got {config.steps}")
    if config.samples < 1:
        raise ConfigError(f"--samples must be >= 1, got {config.samples}")


def _parse_state(config: RunConfig, entry: MapEntry) -> TupleState:
    s = parse_state(config.state, entry.site_kind)
    if s.n < 2:
        raise ConfigError(f"State has {s.n} site, every relation needs at least 2")
    return s


def states_for(config: RunConfig, entry: MapEntry, n: Optional[int] = None) -> List[TupleState]:
    """The --state literal if given, else `samples` seeded states of n sites (--n when n is None)."""
    if config.state:
        s = _parse_state(config, entry)
        if n is not None and s.n != n:
            raise ConfigError(f"State has {s.n} sites, this run needs {n}")
        return [s]
    n = config.n if n is None else n
    return sample_states(entry.sampler, n, config.samples, config.seed, d=config.d, distinct=entry.distinct)


def start_state(config: RunConfig, entry: MapEntry) -> TupleState:
    if config.state:
        return _parse_state(config, entry)
    return sample_states(entry.sampler, config.n, 1, config.seed, d=config.d, distinct=entry.distinct)[0]


def outcome_rows(batch: BatchResult, states: List[TupleState]) -> List[Dict[str, str]]:
    return [
        {"sample": str(o.index), "status": o.status, "reason": o.reason, "state": format_state(states[o.index])}
        for o in batch.outcomes
    ]


def exit_code(counts: Dict[str, int]) -> int:
    return 0 if counts["fail"] == 0 else 1


def check_generator(config: RunConfig, s: TupleState) -> None:
    if s.n < 2:
        raise ConfigError(f"Monodromy maps need at least 2 sites, got {s.n}")
    if not 1 <= config.generator <= s.n:
        raise ConfigError(f"--generator must lie in 1..{s.n}, got {config.generator}")
