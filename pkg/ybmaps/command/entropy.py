# command/entropy.py
from typing import Tuple

from ybmaps.api.dynamics import height_series, iterate
from ybmaps.api.literals import format_state
from ybmaps.api.report import ResultDocument, RunConfig
from ybmaps.command.common import check_counts, check_generator, resolve_map, start_state


def run(config: RunConfig) -> Tuple[ResultDocument, int]:
    check_counts(config)
    entry = resolve_map(config)
    s = start_state(config, entry)
    check_generator(config, s)
    orbit = iterate(entry.ybmap, s, config.generator, config.steps)
    series = height_series(orbit)

    doc = ResultDocument.start(config)
    doc.rows = [{"step": str(k), "height": str(h)} for k, h in enumerate(series.heights)]
    doc.summary = {
        "map": entry.ybmap.name,
        "start": format_state(s),
        "length": len(series.heights),
        "truncated_at": orbit.truncated_at,
        "window_start": series.window_start,
        "log_slope": series.log_slope,
        "loglog_slope": series.loglog_slope,
        "max_height": max(series.heights),
    }
    return doc, 0
