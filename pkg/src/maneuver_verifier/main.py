"""
Command-line entry point
"""

import argparse
import logging
import sys
from typing import List, Optional

from maneuver_verifier.core.envelope import envelope_of
from maneuver_verifier.core.pipeline import (
    apply_overrides,
    rank_traces,
    resolve_rules,
    run_pipeline,
    signatures_of,
)
from maneuver_verifier.core.scenario import load_scenario_file
from maneuver_verifier.errors import ExportError, ManeuverVerifierError
from maneuver_verifier.exporters import (
    BaseExporter,
    DotExporter,
    SmvExporter,
    SvgExporter,
    YamlExporter,
)
from maneuver_verifier.models.data_classes import Path
from maneuver_verifier.models.enums import Command
from maneuver_verifier.rules.valuation import trace_from_path
from maneuver_verifier.utils.config import VerifierConfig, settings
from maneuver_verifier.utils.logging import setup_logging

logger = logging.getLogger("maneuver_verifier.main")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_SATISFYING_TRACE = 3


def _boolean(value: str) -> bool:
    lowered = value.lower()
    if lowered not in ("true", "false"):
        raise argparse.ArgumentTypeError("expected true or false")
    return lowered == "true"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="scenario file (YAML)")
    common.add_argument("--output", help="output file; stdout when omitted")
    common.add_argument("--step", type=float, help="override the planning interval [s]")
    common.add_argument("--ds", type=float, help="envelope sampling distance [m]")
    common.add_argument(
        "--max-checked", type=int, help="verify only the N cheapest traces"
    )
    common.add_argument(
        "--congested", type=_boolean, help="override the CONGESTED signal (true|false)"
    )
    common.add_argument(
        "--trace", type=int, help="index into the cost-sorted traces (default 0)"
    )
    common.add_argument("--rules", help="YAML file with additional rule templates")
    common.add_argument("--config", help="JSON file with run options")
    common.add_argument(
        "--log-level",
        default=settings.LOG_LEVEL,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    common.add_argument("--log-file", default=settings.LOG_FILE)

    parser = argparse.ArgumentParser(
        prog="maneuver-verifier",
        description="Verify high-level maneuvers against LTL traffic rules",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    helps = {
        Command.PARTITION: "dump the free space-time cells per step",
        Command.GRAPH: "dump the navigation graph (DOT)",
        Command.ENUMERATE: "list all traces sorted by cost",
        Command.VERIFY: "verify all traces and write the report",
        Command.ENVELOPE: "maneuver envelopes of one sorted trace",
        Command.PLOT: "render the partition as SVG",
        Command.EXPORT_SMV: "write an SMV model of one sorted trace",
    }
    for command, text in helps.items():
        commands.add_parser(command.value, parents=[common], help=text)
    return parser


def load_config(args: argparse.Namespace) -> VerifierConfig:
    """Config file first, then command-line flags on top"""

    config = VerifierConfig.from_file(args.config) if args.config else VerifierConfig()
    if args.step is not None:
        config.step_override = args.step
    if args.congested is not None:
        config.congested_override = args.congested
    if args.ds is not None:
        config.ds = args.ds
    if args.max_checked is not None:
        config.max_checked = args.max_checked
    if args.rules is not None:
        config.rules_file = args.rules
    config.__post_init__()
    return config


def _emit(exporter: BaseExporter, payload, output: Optional[str]):
    if output:
        exporter.export(payload, output)
    else:
        sys.stdout.write(exporter.render(payload))


def _select(ranked, index: int) -> Path:
    if not 0 <= index < len(ranked):
        raise ExportError(f"trace index {index} out of range (0..{len(ranked) - 1})")
    return ranked[index][1]


def run_command(args: argparse.Namespace) -> int:
    command = Command(args.command)
    config = load_config(args)
    scenario = load_scenario_file(args.input)
    trace_index = args.trace if args.trace is not None else 0

    if command is Command.VERIFY:
        report = run_pipeline(scenario, config)
        _emit(YamlExporter(), report.to_schema(), args.output)
        if not report.satisfying:
            logger.warning("No trace satisfies all rules")
            return EXIT_NO_SATISFYING_TRACE
        return EXIT_OK

    scenario = apply_overrides(scenario, config)
    traces = rank_traces(scenario, config)

    if command is Command.PARTITION:
        _emit(YamlExporter(), traces.abstraction.to_document(), args.output)
    elif command is Command.GRAPH:
        _emit(DotExporter(), traces.graph, args.output)
    elif command is Command.ENUMERATE:
        listing = {
            "trace_count": traces.trace_count,
            "truncated": traces.truncated,
            "traces": [
                {"index": i, "cost": cost, "signatures": signatures_of(path)}
                for i, (cost, path) in enumerate(traces.ranked)
            ],
        }
        _emit(YamlExporter(), listing, args.output)
    elif command is Command.ENVELOPE:
        path = _select(traces.ranked, trace_index)
        envelopes = [e.as_dict() for e in envelope_of(path, config.ds)]
        _emit(YamlExporter(), {"trace": trace_index, "envelopes": envelopes}, args.output)
    elif command is Command.PLOT:
        highlight = (
            _select(traces.ranked, args.trace) if args.trace is not None else None
        )
        _emit(SvgExporter(highlight=highlight), traces.abstraction, args.output)
    elif command is Command.EXPORT_SMV:
        path = _select(traces.ranked, trace_index)
        rules = resolve_rules(scenario, config)
        _emit(SmvExporter(rules), trace_from_path(path, scenario), args.output)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level, args.log_file)

    try:
        return run_command(args)
    except (ManeuverVerifierError, OSError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
