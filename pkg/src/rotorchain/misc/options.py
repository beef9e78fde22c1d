# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides various option classes."""

from dataclasses import asdict, dataclass

from rotorchain.misc.accuracy import RESIDUAL_ACCURACY, STRETCH_RESIDUAL_ACCURACY
from rotorchain.misc.defaults import (
    DENSE_LIMIT,
    DENSE_SUPEROPERATOR_LIMIT,
    SPARSE_SUPEROPERATOR_LIMIT,
    STRETCH_SUPEROPERATOR_SIZE,
)

PERMC_SPECS = ("NATURAL", "MMD_ATA", "MMD_AT_PLUS_A", "COLAMD")
"""Column orderings understood by SuperLU."""


@dataclass(frozen=True)
class AnnealConfig:
    """Settings of the simulated annealing used for the global discord.

    Parameters
    ----------
    initial_temperature : float = 1.0
        Starting temperature of the Metropolis walk.
    cooling_factor : float = 0.95
        Geometric cooling factor applied after each temperature plateau.
    steps_per_temperature : int = 200
        Proposals per temperature plateau.
    restarts : int = 8
        Independent restarts. The minimum over all restarts is returned.
    proposal_width : float = 0.3
        Standard deviation, in radians, of the Gaussian angle proposals.
    seed : int = 0
        Master seed. Restart seeds are spawned deterministically from it.
    tolerance : float = 1e-6
        Convergence tolerance of the final local polish.
    min_temperature : float = 1e-3
        Temperature at which a restart stops cooling.
    polish : bool = True
        Whether the best annealed point of each restart is refined by a local simplex search.
    """

    initial_temperature: float = 1.0
    cooling_factor: float = 0.95
    steps_per_temperature: int = 200
    restarts: int = 8
    proposal_width: float = 0.3
    seed: int = 0
    tolerance: float = 1e-6
    min_temperature: float = 1e-3
    polish: bool = True

    def __post_init__(self):
        """Validate the annealing settings."""
        if self.initial_temperature <= 0:
            raise ValueError("The initial temperature must be positive.")
        if not 0 < self.cooling_factor < 1:
            raise ValueError("The cooling factor must lie in (0, 1).")
        if self.steps_per_temperature < 1 or self.restarts < 1:
            raise ValueError("Steps per temperature and restarts must be positive integers.")
        if self.proposal_width <= 0 or self.tolerance <= 0:
            raise ValueError("The proposal width and the tolerance must be positive.")
        if not 0 < self.min_temperature < self.initial_temperature:
            raise ValueError("The minimum temperature must lie in (0, initial_temperature).")

    def to_dict(self):
        """Provide the dictionary representation of the AnnealConfig class."""
        return asdict(self)


@dataclass(frozen=True)
class SolverOptions:
    """Numerical settings of the steady-state and eigenvalue solvers.

    Parameters
    ----------
    method : str = "auto"
        Steady-state path: ``"auto"``, ``"dense"``, ``"sparse"`` or ``"propagate"``.
    dense_superoperator_limit : int
        Largest superoperator dimension solved through a dense null space.
    sparse_superoperator_limit : int
        Largest superoperator dimension solved through the sparse direct solve.
    stretch_size : int
        Superoperator dimension above which ``stretch_residual`` replaces ``residual``.
    dense_limit : int
        Largest Hilbert dimension diagonalized densely.
    residual : float
        Relative residual ``|L rho| / |L|`` accepted for a steady state.
    stretch_residual : float
        Relaxed relative residual accepted for stretch configurations.
    refinement_steps : int = 3
        Iterative-refinement sweeps of the sparse direct solve.
    permc_spec : str = "MMD_AT_PLUS_A"
        Column ordering of the sparse LU factorization, one of ``PERMC_SPECS``. Passed to
        :func:`scipy.sparse.linalg.splu`.
    propagation_horizon : float = 1000.0
        Evolution time of the propagation fallback, starting from the maximally mixed state.
    """

    method: str = "auto"
    dense_superoperator_limit: int = DENSE_SUPEROPERATOR_LIMIT
    sparse_superoperator_limit: int = SPARSE_SUPEROPERATOR_LIMIT
    stretch_size: int = STRETCH_SUPEROPERATOR_SIZE
    dense_limit: int = DENSE_LIMIT
    residual: float = RESIDUAL_ACCURACY
    stretch_residual: float = STRETCH_RESIDUAL_ACCURACY
    refinement_steps: int = 3
    permc_spec: str = "MMD_AT_PLUS_A"
    propagation_horizon: float = 1000.0

    def __post_init__(self):
        """Validate the solver settings."""
        if self.method not in ("auto", "dense", "sparse", "propagate"):
            raise ValueError(f"Unknown steady-state method '{self.method}'.")
        if self.permc_spec not in PERMC_SPECS:
            raise ValueError(f"Unknown column ordering '{self.permc_spec}'.")

    def to_dict(self):
        """Provide the dictionary representation of the SolverOptions class."""
        return asdict(self)
