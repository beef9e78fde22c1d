# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides quantum-information measures of chain states."""

from rotorchain.infotheory.discord import (
    DiscordObjective,
    DiscordResult,
    dephase,
    gellmann_generators,
    global_discord,
    local_rotation,
    rotated_basis,
)
from rotorchain.infotheory.measures import (
    InformationRecord,
    Partition,
    information_measures,
    l1_coherence,
    mutual_information,
    negativity,
    partial_trace,
    partial_transpose,
    reduced_matrix,
    relative_entropy,
    shannon_entropy,
    von_neumann_entropy,
)
