# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the chiral clock model."""

from rotorchain.model.hamiltonian import (
    HamiltonianSplit,
    build_hamiltonian,
    build_hccm,
    build_hccm_rotated,
    diagonal_energies,
)
from rotorchain.model.params import CCMParams, Variant, homogeneous_phases, staggered_phases
from rotorchain.model.symmetry import (
    SymmetryProjector,
    build_symmetry_projector,
    project_hamiltonian,
    symmetry_operator,
)
