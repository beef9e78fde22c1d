# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the ground-state and low-excitation analysis of the chain."""

from rotorchain.groundstate.currents import ground_state_currents, ground_tunneling_current
from rotorchain.groundstate.gap import fit_gap_exponent, gap_curve
from rotorchain.groundstate.order import (
    BinderPoint,
    binder_crossings,
    binder_cumulant,
    binder_point,
    order_parameter,
    order_parameter_mean,
    order_parameter_moments,
    order_parameter_values,
)
from rotorchain.groundstate.spectrum import (
    Sector,
    SpectrumResult,
    default_sector,
    ground_state,
    lowest_eigenpairs,
)
