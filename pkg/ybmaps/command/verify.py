# command/verify.py
import logging
from typing import Callable, Dict, Optional, Tuple

from ybmaps.api.errors import ConfigError
from ybmaps.api.maps import lyubashenko_yb_iff_commute
from ybmaps.api.report import ResultDocument, RunConfig
from ybmaps.api.sampling import sample_states
from ybmaps.api.ybcore import (
    BatchResult,
    SampleOutcome,
    TupleState,
    YBMap,
    check_braid,
    check_commutativity,
    check_conjugation,
    check_involution,
    check_product_identity,
    check_reversibility,
    check_shift_covariance,
    check_YB,
    run_batch,
    yb_from_monodromy,
)
from ybmaps.command.common import check_counts, exit_code, outcome_rows, resolve_map, states_for

log = logging.getLogger(__name__)

Check = Callable[[YBMap, TupleState], bool]


def _all_pairs(m: YBMap, s: TupleState) -> bool:
    return all(check_commutativity(m, s, i, j) for i in range(1, s.n + 1) for j in range(i + 1, s.n + 1))


def _every_index(check) -> Check:
    return lambda m, s: all(check(m, s, i) for i in range(1, s.n + 1))


# relation -> (check, fixed n or None for --n)
RELATIONS: Dict[str, Tuple[Check, Optional[int]]] = {
    "yang-baxter": (check_YB, 3),
    "reversibility": (check_reversibility, 2),
    "conjugation": (check_conjugation, 2),
    "commutativity": (_all_pairs, None),
    "product": (check_product_identity, None),
    "braid": (_every_index(check_braid), None),
    "involution": (_every_index(check_involution), None),
    "shift": (_every_index(check_shift_covariance), None),
}
SPECIAL = ["monodromy", "lyubashenko"]


def relation_names():
    return list(RELATIONS) + SPECIAL


def _run_monodromy(config: RunConfig, doc: ResultDocument, entry) -> int:
    if config.state:
        raise ConfigError("--relation monodromy samples its own pairs and triples; drop --state")
    pairs = sample_states(entry.sampler, 2, config.samples, config.seed, d=config.d, distinct=entry.distinct)
    triples = sample_states(entry.sampler, 3, config.samples, config.seed + 1, d=config.d, distinct=entry.distinct)
    verdict = yb_from_monodromy(entry.ybmap, pairs, triples)
    for name, batch in (("pairs", verdict.reversible), ("triples", verdict.commuting)):
        for k in doc.counts:
            doc.counts[k] += batch.counts[k]
        states = pairs if name == "pairs" else triples
        for row in outcome_rows(batch, states):
            doc.rows.append({"set": name, **row})
    doc.summary = {
        "consistent": verdict.consistent,
        "failed_conditions": verdict.failed_conditions,
        "pairs": verdict.reversible.counts,
        "triples": verdict.commuting.counts,
    }
    return 0 if verdict.consistent else 1


def _run_lyubashenko(config: RunConfig, doc: ResultDocument, entry) -> int:
    if entry.pair is None:
        raise ConfigError("--relation lyubashenko needs --map lyubashenko")
    triples = states_for(config, entry, n=3)
    verdict = lyubashenko_yb_iff_commute(entry.pair, triples)
    batch = BatchResult()
    for k, (yb, pointwise) in enumerate(zip(verdict.yb, verdict.pointwise_commute)):
        if yb is None:
            batch.outcomes.append(SampleOutcome(k, "skipped", "pole"))
        else:
            batch.outcomes.append(SampleOutcome(k, "pass" if yb == pointwise else "fail"))
    doc.counts = batch.counts
    doc.rows = [
        {**row, "yang_baxter": str(yb), "pointwise_commute": str(pc)}
        for row, yb, pc in zip(outcome_rows(batch, triples), verdict.yb, verdict.pointwise_commute)
    ]
    doc.summary = {
        "pair": entry.pair.name,
        "p": str(entry.pair.p),
        "q": str(entry.pair.q),
        "agrees": verdict.agrees,
        "yang_baxter_holds": sum(1 for v in verdict.yb if v),
        "function_commute": verdict.function_commute,
        "function_reversible": verdict.function_reversible,
    }
    return 0 if verdict.agrees else 1


def run(config: RunConfig) -> Tuple[ResultDocument, int]:
    check_counts(config)
    entry = resolve_map(config)
    relation = config.relation or "yang-baxter"
    doc = ResultDocument.start(config)
    if relation == "monodromy":
        return doc, _run_monodromy(config, doc, entry)
    if relation == "lyubashenko":
        return doc, _run_lyubashenko(config, doc, entry)
    if relation not in RELATIONS:
        raise ConfigError(f"Unknown relation '{relation}'. Choose from {relation_names()}")

    check, fixed_n = RELATIONS[relation]
    states = states_for(config, entry, n=fixed_n)
    n = states[0].n
    if relation == "braid" and n < 3:
        raise ConfigError("--relation braid needs --n >= 3")
    m = entry.ybmap
    batch = run_batch(lambda s: check(m, s), states, f"{m.name} {relation}")
    doc.counts = batch.counts
    doc.rows = outcome_rows(batch, states)
    doc.summary = {
        "map": m.name,
        "description": m.description,
        "singular_set": m.singular_set,
        "relation": relation,
        "n": n,
        "holds": batch.ok,
    }
    return doc, exit_code(doc.counts)
