# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the rotorchain miscellaneous subpackage."""

from rotorchain.misc.accuracy import (
    CURRENT_ACCURACY,
    EIGEN_ACCURACY,
    OPERATOR_ACCURACY,
    RESIDUAL_ACCURACY,
    TRACE_ACCURACY,
    Accuracy,
)
from rotorchain.misc.checks import (
    check_density_matrix,
    check_hermitian,
    check_in_interval,
    check_is_float_int,
    check_positive,
    check_site,
    check_square,
)
from rotorchain.misc.options import PERMC_SPECS, AnnealConfig, SolverOptions
