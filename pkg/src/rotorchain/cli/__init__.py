# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the sweep configuration, pipelines and command line of rotorchain."""

from rotorchain.cli.config import (
    CONFIG_SCHEMA_VERSION,
    MeasureOptions,
    PhasePattern,
    PointParams,
    SweepAxis,
    SweepConfig,
    SweepSpec,
    list_presets,
    load_config,
    load_preset,
    parse_config,
)
from rotorchain.cli.pipelines import (
    run_discord,
    run_ground_sweep,
    run_ness_sweep,
    run_point,
    run_sweep,
)
from rotorchain.cli.records import SweepRecord, columns, read_csv, write_csv, write_sidecar
