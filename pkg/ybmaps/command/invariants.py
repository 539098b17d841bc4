# command/invariants.py
from typing import Dict, Tuple

from ybmaps.api.algebra import CharPoly
from ybmaps.api.dynamics import conservation_report, iterate
from ybmaps.api.literals import format_state
from ybmaps.api.report import ResultDocument, RunConfig
from ybmaps.command.common import check_counts, check_generator, resolve_family, resolve_map, start_state


def _row(step: int, cp: CharPoly) -> Dict[str, str]:
    row = {"step": str(step), "clearing_factor": cp.clearing_factor.format()}
    for k, c in enumerate(cp.coefficients):
        row[f"c{k}"] = c.format()
    return row


def run(config: RunConfig) -> Tuple[ResultDocument, int]:
    """Spectral invariants of the start state, then their conservation along T_generator."""
    check_counts(config)
    entry = resolve_map(config)
    family = resolve_family(config, entry)
    s = start_state(config, entry)
    check_generator(config, s)
    orbit = iterate(entry.ybmap, s, config.generator, config.steps)
    report = conservation_report(family, orbit)

    doc = ResultDocument.start(config)
    for k, cp in enumerate(report.invariants):
        if cp is None:
            doc.rows.append({"step": str(k), "clearing_factor": "", "error": report.errors[k]})
        else:
            doc.rows.append(_row(k, cp))
    first = next((cp for cp in report.invariants if cp is not None), None)
    doc.summary = {
        "map": entry.ybmap.name,
        "family": family.name,
        "start": format_state(s),
        "steps": len(orbit) - 1,
        "truncated_at": orbit.truncated_at,
        "conserved": report.conserved,
        "first_divergence": report.first_divergence,
        "errors": {str(k): v for k, v in report.errors.items()},
    }
    if first is not None:
        doc.summary.update({
            "trace": first.trace.format(),
            "determinant": first.determinant.format(),
            "char_poly": first.to_json(),
        })
    return doc, 0 if report.conserved else 1
