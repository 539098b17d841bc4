# app.py
import argparse
import importlib
import logging
import sys
from typing import List, Optional

from ybmaps import __version__, settings
from ybmaps.api.errors import ConfigError
from ybmaps.api.report import RunConfig

log = logging.getLogger(__name__)

STATE_HELP = (
    'state literal: sites split by ";", fields by ",", vectors in [..]. '
    'dressing "(1,3;2,1)", kdv "([1,0],[1,1],2);([0,1],[1,1],1)", scalar "(1,1,1)"'
)

# --------------------------
# Subcommands
# --------------------------
command_paths = {
    "verify": "command.verify",
    "orbit": "command.orbit",
    "invariants": "command.invariants",
    "refactor": "command.refactor",
    "entropy": "command.entropy",
}
command_help = {
    "verify": "check a relation on seeded random exact samples",
    "orbit": "iterate one monodromy map T_i",
    "invariants": "characteristic polynomial of the monodromy matrix along an orbit",
    "refactor": "check A(x~)A(y~) = A(y)A(x) on sampled pairs",
    "entropy": "height growth along an orbit",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ybmaps", description="Exact Yang-Baxter map experiments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in command_paths:
        p = sub.add_parser(name, help=command_help[name], description=command_help[name])
        p.add_argument("--map", help="adler | kdv | lyubashenko | identity | permutation | sumleft")
        p.add_argument("--family", help="dressing | kdv (defaults to the map's own family)")
        p.add_argument("--n", type=int, default=3, help="number of sites")
        p.add_argument("--d", type=int, default=2, help="kdv vector dimension")
        p.add_argument("--generator", type=int, default=1, help="index i of T_i")
        p.add_argument("--steps", type=int, default=10)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--seed", type=int, default=settings.YB_SEED)
        p.add_argument("--state", help=STATE_HELP)
        p.add_argument("--relation", help="verify only: yang-baxter, reversibility, conjugation, commutativity, "
                                          "product, braid, involution, shift, monodromy, lyubashenko")
        p.add_argument("--pair", help="lyubashenko preset: powers | chebyshev | shift | mixed")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--output", help="write the document here instead of stdout")
        p.add_argument("--no-timestamp", action="store_true", default=settings.YB_NO_TIMESTAMP)
        p.add_argument("--log-level", default=settings.YB_LOG_LEVEL)
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        map=args.map,
        family=args.family,
        n=args.n,
        d=args.d,
        generator=args.generator,
        steps=args.steps,
        samples=args.samples,
        seed=args.seed,
        state=args.state,
        relation=args.relation,
        pair=args.pair,
        format=args.format,
        output=args.output,
        no_timestamp=args.no_timestamp,
    )


# --------------------------
# MAIN ENTRY FUNCTION
# --------------------------
def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        logging.basicConfig(
            level=args.log_level.upper(),
            format="%(asctime)s %(levelname)s %(name)s %(message)s",
            stream=sys.stderr,
        )
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    config = to_config(args)
    path = command_paths[config.command]

    try:
        module = importlib.import_module(f"ybmaps.{path}")
        if not hasattr(module, "run"):
            print(f"Module {path} missing run(config).", file=sys.stderr)
            return 2
        doc, code = module.run(config)
    except ModuleNotFoundError as e:
        print(f"Command module '{path}' not found: {e}", file=sys.stderr)
        return 2
    except ConfigError as e:
        log.error("configuration error: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        log.exception("command %s failed", config.command)
        print(f"Failed to run '{config.command}': {e}", file=sys.stderr)
        return 2

    text = doc.render(config.format)
    if config.output:
        try:
            with open(config.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as e:
            log.error("cannot write %s: %s", config.output, e)
            print(f"error: cannot write output file: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    log.info("%s finished: counts=%s exit=%d", config.command, doc.counts, code)
    return code
