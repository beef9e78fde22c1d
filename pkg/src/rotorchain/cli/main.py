# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the ``rotorchain`` command line."""

import argparse
from pathlib import Path
import time

from beartype.typing import List, Optional

from rotorchain.cli.config import SweepConfig, list_presets, load_config, load_preset
from rotorchain.cli.pipelines import DISCORD, GROUND_SWEEP, NESS_SWEEP, run_sweep
from rotorchain.cli.records import sidecar_path, write_csv, write_sidecar
from rotorchain.errors import ConfigurationError
from rotorchain.logger import LOG

EXIT_OK = 0
EXIT_ALL_FAILED = 1
EXIT_CONFIGURATION = 2

SWEEP_COMMANDS = (NESS_SWEEP, GROUND_SWEEP, DISCORD)
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _add_source_arguments(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", type=Path, help="Path of a JSON sweep configuration.")
    source.add_argument("--preset", help="Name of a shipped preset (see 'list-presets').")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the ``rotorchain`` command."""
    parser = argparse.ArgumentParser(
        prog="rotorchain",
        description="Steady states, currents and ground states of dissipative clock-rotor chains.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        choices=LOG_LEVELS,
        help="Logging level (default: WARNING).",
    )
    parser.add_argument("--log-file", type=Path, help="Also write the log to this file.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    helps = {
        NESS_SWEEP: "Sweep the non-equilibrium steady state and its currents.",
        GROUND_SWEEP: "Sweep the ground state, its gap and its Binder cumulant.",
        DISCORD: "Sweep the global discord of steady or ground states.",
    }
    for command in SWEEP_COMMANDS:
        sub = subparsers.add_parser(command, help=helps[command])
        _add_source_arguments(sub)
        sub.add_argument(
            "--output", type=Path, help="CSV output path (default: <name>-<command>.csv)."
        )
        sub.add_argument(
            "--parallel", type=int, default=None, help="Worker processes (default: 1)."
        )
        sub.add_argument("--seed", type=int, default=None, help="Seed of the discord annealing.")
        sub.add_argument(
            "--no-sidecar", action="store_true", help="Skip the JSON diagnostics sidecar."
        )

    validate = subparsers.add_parser("validate-config", help="Validate a configuration.")
    _add_source_arguments(validate)
    subparsers.add_parser("list-presets", help="Print the names of the shipped presets.")
    return parser


def _load(args: argparse.Namespace) -> SweepConfig:
    config = load_preset(args.preset) if args.preset else load_config(args.config)
    if getattr(args, "seed", None) is not None:
        config = config.with_seed(args.seed)
    return config


def _run(args: argparse.Namespace, config: SweepConfig) -> int:
    # Lazy import to avoid circular imports
    from rotorchain import __version__

    if args.parallel is not None and args.parallel < 1:
        raise ConfigurationError(f"--parallel must be positive, got {args.parallel}.")
    output = args.output or Path(f"{config.name}-{args.command}.csv")
    start = time.perf_counter()
    records = run_sweep(args.command, config, args.parallel)
    wall_time = time.perf_counter() - start

    write_csv(output, args.command, records)
    if not args.no_sidecar:
        write_sidecar(sidecar_path(output), args.command, config, records, wall_time, __version__)
    failed = sum(record.failed for record in records)
    print(f"Wrote {len(records)} records to {output} ({failed} failed, {wall_time:.1f} s).")
    return EXIT_ALL_FAILED if failed == len(records) else EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Run the ``rotorchain`` command and return its exit code.

    Exit codes are ``0`` on success, ``1`` when every grid point failed and ``2``
    for configuration errors.
    """
    args = build_parser().parse_args(argv)
    LOG.setLevel(args.log_level)
    if args.log_file is not None:
        LOG.log_to_file(str(args.log_file), level=args.log_level)

    if args.command == "list-presets":
        print("\n".join(list_presets()))
        return EXIT_OK
    try:
        config = _load(args)
        if args.command == "validate-config":
            print(f"Configuration '{config.name}' is valid: {len(config.points())} points.")
            return EXIT_OK
        return _run(args, config)
    except ConfigurationError as error:
        LOG.error(f"Invalid configuration: {error}")
        print(f"error: {error}")
        return EXIT_CONFIGURATION
