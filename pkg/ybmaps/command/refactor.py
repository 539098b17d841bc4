# command/refactor.py
import logging
from typing import Tuple

from ybmaps.api.errors import NotFactorizable
from ybmaps.api.lax import dressing_A, refactor_check, refactor_solve_dressing
from ybmaps.api.report import ResultDocument, RunConfig
from ybmaps.api.ybcore import TupleState, apply_R, run_batch
from ybmaps.command.common import check_counts, exit_code, outcome_rows, resolve_family, resolve_map, states_for

log = logging.getLogger(__name__)


def run(config: RunConfig) -> Tuple[ResultDocument, int]:
    """A(x~) A(y~) = A(y) A(x) on pairs; the dressing family also re-solves the split."""
    check_counts(config)
    entry = resolve_map(config)
    family = resolve_family(config, entry)
    m = entry.ybmap
    solve = family.name == "dressing" and m.name == "adler"

    def check(s: TupleState) -> bool:
        x, y = s.sites
        if not refactor_check(family, m, x, y):
            return False
        if not solve:
            return True
        try:
            split = refactor_solve_dressing(dressing_A(y) @ dressing_A(x), x.beta, y.beta)
        except NotFactorizable as e:
            log.debug("split failed: %s", e)
            return False
        return split == apply_R(m, x, y)

    states = states_for(config, entry, n=2)
    batch = run_batch(check, states, f"{m.name}/{family.name} refactor")
    doc = ResultDocument.start(config)
    doc.counts = batch.counts
    doc.rows = outcome_rows(batch, states)
    doc.summary = {
        "map": m.name,
        "family": family.name,
        "d": family.dim,
        "orientation": "A(x~)A(y~) = A(y)A(x)",
        "solve_checked": solve,
        "holds": batch.ok,
    }
    return doc, exit_code(doc.counts)
