# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Module providing default run parameters."""

import os

DEFAULT_WORKERS: int = int(os.environ.get("ROTORCHAIN_WORKERS", 1))
"""Default number of worker processes for parameter sweeps.

By default, rotorchain searches for the environment variable ``ROTORCHAIN_WORKERS``,
and if this variable does not exist, sweeps run serially.
"""

DENSE_LIMIT: int = int(os.environ.get("ROTORCHAIN_DENSE_LIMIT", 1000))
"""Largest Hilbert-space dimension for which dense eigensolvers are used.

By default, rotorchain searches for the environment variable ``ROTORCHAIN_DENSE_LIMIT``,
and if this variable does not exist, it uses ``1000``.
"""

DENSE_SUPEROPERATOR_LIMIT: int = int(os.environ.get("ROTORCHAIN_DENSE_SUPEROPERATOR_LIMIT", 729))
"""Largest superoperator dimension for which the steady state is taken from a dense null space.

The default covers chains of up to three qutrits. Larger chains go through the
sparse direct solve.
"""

SPARSE_SUPEROPERATOR_LIMIT: int = 1_000_000
"""Largest superoperator dimension handled by the sparse direct steady-state solve."""

STRETCH_SUPEROPERATOR_SIZE: int = 100_000
"""Superoperator dimension above which the relaxed stretch residual applies."""

DEFAULT_N_STATES: int = 3
"""Default number of clock states per rotor."""
