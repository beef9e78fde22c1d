# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the numerical tolerances used across rotorchain."""

import numpy as np

from rotorchain.typing import OperatorLike, Real

OPERATOR_ACCURACY: Real = 1e-12
"""Constant for Hermiticity and exact operator identities."""

IMAGINARY_ACCURACY: Real = 1e-10
"""Constant for discarding imaginary parts of physical expectation values."""

DIAGONAL_ACCURACY: Real = 1e-14
"""Constant for discarding imaginary parts of diagonal Hamiltonian entries."""

TRACE_ACCURACY: Real = 1e-10
"""Constant for trace normalization and Hermiticity of density matrices."""

POSITIVITY_ACCURACY: Real = 1e-8
"""Constant for the lowest admissible eigenvalue of a density matrix."""

RESIDUAL_ACCURACY: Real = 1e-10
"""Constant for the relative residual of a steady state."""

STRETCH_RESIDUAL_ACCURACY: Real = 1e-8
"""Relaxed relative residual accepted for stretch configurations (iterative refinement)."""

CURRENT_ACCURACY: Real = 1e-9
"""Constant for current consistency checks and the first law at stationarity."""

EIGEN_ACCURACY: Real = 1e-10
"""Constant for eigenpair residuals and degeneracy detection."""

ENTROPY_CUTOFF: Real = 1e-12
"""Eigenvalues below this value are treated as zero inside entropies."""


class Accuracy:
    """Tolerance-aware predicates for the numerical objects of the package."""

    @staticmethod
    def max_abs(matrix: OperatorLike) -> float:
        """Return the largest absolute entry of a dense or sparse matrix."""
        if hasattr(matrix, "tocoo"):
            data = matrix.tocoo().data
            return float(np.abs(data).max()) if data.size else 0.0
        return float(np.abs(matrix).max()) if np.size(matrix) else 0.0

    @staticmethod
    def is_hermitian(matrix: OperatorLike, tolerance: Real = OPERATOR_ACCURACY) -> bool:
        """Check if a matrix equals its conjugate transpose within ``tolerance``.

        Returns
        -------
        bool
            ``True`` if every entry of ``A - A^H`` is within the tolerance,
            ``False`` otherwise.
        """
        difference = matrix - matrix.conj().T
        return Accuracy.max_abs(difference) <= tolerance

    @staticmethod
    def is_diagonal(matrix: OperatorLike) -> bool:
        """Check if a matrix has no stored off-diagonal entries different from zero."""
        if hasattr(matrix, "tocoo"):
            coo = matrix.tocoo()
            off = coo.row != coo.col
            return not np.any(coo.data[off] != 0)
        return not np.any(matrix - np.diag(np.diag(matrix)))
