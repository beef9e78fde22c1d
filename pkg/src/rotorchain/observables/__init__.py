# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the currents and heat flows evaluated on chain states."""

from rotorchain.observables.currents import (
    CurrentRecord,
    mean_square_current,
    real_expectation,
    steady_currents,
    thermal_current,
    thermal_current_operator,
    tunneling_current,
    tunneling_current_operator,
)
from rotorchain.observables.heat import (
    HeatRecord,
    heat_currents,
    standard_heat_currents,
    sublattice_sums,
)
from rotorchain.observables.susceptibility import (
    SusceptibilityRecord,
    current_susceptibility,
    gradient_baths,
    susceptibility_curve,
)
