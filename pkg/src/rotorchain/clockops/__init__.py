# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the clock-operator algebra of rotorchain."""

from rotorchain.clockops.basis import BasisState, ClockParams
from rotorchain.clockops.operators import (
    ManyBodyOperator,
    build_mu,
    build_sigma,
    clock_phase,
    embed_local,
    identity,
    local_projector,
    two_site_bond,
    zero,
)
