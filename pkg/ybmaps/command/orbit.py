# command/orbit.py
from typing import Tuple

from ybmaps.api.dynamics import iterate, orbit_distinct, orbit_period
from ybmaps.api.literals import format_state
from ybmaps.api.report import ResultDocument, RunConfig
from ybmaps.command.common import check_counts, check_generator, resolve_map, start_state


def run(config: RunConfig) -> Tuple[ResultDocument, int]:
    check_counts(config)
    entry = resolve_map(config)
    s = start_state(config, entry)
    check_generator(config, s)
    orbit = iterate(entry.ybmap, s, config.generator, config.steps)

    doc = ResultDocument.start(config)
    doc.rows = [{"step": str(k), **state.fields()} for k, state in enumerate(orbit.states)]
    doc.summary = {
        "map": entry.ybmap.name,
        "n": s.n,
        "generator": config.generator,
        "requested_steps": orbit.requested_steps,
        "start": format_state(s),
        "length": len(orbit),
        "truncated_at": orbit.truncated_at,
        "truncation_reason": orbit.truncation_reason,
        "period": orbit_period(orbit),
        "distinct": orbit_distinct(orbit),
    }
    return doc, 0
