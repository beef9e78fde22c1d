# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides rotorchain-specific errors."""

from functools import wraps

from beartype.typing import Any, Optional
import numpy as np
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence

from rotorchain.logger import LOG


class RotorChainError(RuntimeError):
    """Provides the base error of rotorchain."""

    pass


class SolverConvergenceError(RotorChainError):
    """Provides error message when an iterative solver does not converge.

    Parameters
    ----------
    msg : str
        Message to raise.
    best : Any, default: None
        Best-so-far result, when the solver produced one.
    """

    def __init__(self, msg: str, best: Optional[Any] = None):
        """Initialize the ``SolverConvergenceError`` error."""
        super().__init__(msg)
        self.best = best


class DegenerateSteadyStateError(RotorChainError):
    """Provides error message when the Liouvillian has more than one steady state.

    Parameters
    ----------
    dimension : int, default: None
        Numerical dimension of the null space, when it was measured.
    """

    def __init__(self, dimension: Optional[int] = None):
        """Initialize the ``DegenerateSteadyStateError`` error."""
        size = "more than one" if dimension is None else str(dimension)
        super().__init__(
            f"The Liouvillian null space has dimension {size}; the steady state is not unique."
        )
        self.dimension = dimension


class StationarityError(RotorChainError):
    """Provides error message when a state assumed stationary violates a stationarity check."""

    pass


class PropagationInstabilityError(RotorChainError):
    """Provides error message when an integration drifts off the density-matrix manifold."""

    pass


class ConfigurationError(ValueError):
    """Provides error message when a sweep configuration cannot be parsed or validated."""

    pass


def protect_linalg(func):
    """Capture linear-algebra backend exceptions and raise a more succinct error message.

    ``LinAlgError`` from NumPy and the ARPACK errors from SciPy become
    :class:`SolverConvergenceError`. The original exception is logged at ``DEBUG``
    level and chained.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        """Capture backend linear-algebra errors.

        Returns
        -------
        out
            Result of the function wrapped.

        Raises
        ------
        SolverConvergenceError
            If a ``LinAlgError``, ``ArpackNoConvergence`` or ``ArpackError`` is observed.
        """
        try:
            return func(*args, **kwargs)
        except ArpackNoConvergence as error:
            LOG.debug(f"ARPACK did not converge in {func.__name__}: {error}")
            raise SolverConvergenceError(
                f"Eigensolver did not converge in '{func.__name__}'.",
                best=(error.eigenvalues, error.eigenvectors),
            ) from error
        except (np.linalg.LinAlgError, ArpackError) as error:
            LOG.debug(f"Linear-algebra failure in {func.__name__}: {error}")
            raise SolverConvergenceError(
                f"Linear-algebra failure in '{func.__name__}': {error}"
            ) from error

    return wrapper
