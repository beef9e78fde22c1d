# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the local GKLS master equation of the rotor chain."""

from rotorchain.lindblad.baths import BathConfig, gibbs_populations, rate
from rotorchain.lindblad.liouvillian import (
    Liouvillian,
    build_liouvillian,
    commutator_superoperator,
    dissipator_superoperator,
    liouvillian_gap,
    spost,
    spre,
    unvectorize,
    vectorize,
)
from rotorchain.lindblad.steady import (
    DensityMatrix,
    NessSolution,
    SteadyStateResult,
    build_ness,
    hermitize,
    propagate,
    solve_steady_state,
    steady_state,
    trace_distance,
)
from rotorchain.lindblad.transitions import (
    Transition,
    TransitionSet,
    classical_generator,
    enumerate_transitions,
)
