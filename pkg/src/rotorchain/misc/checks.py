# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides functions for performing common checks."""

from beartype.typing import Optional, Union
import numpy as np

from rotorchain.misc.accuracy import (
    POSITIVITY_ACCURACY,
    TRACE_ACCURACY,
    Accuracy,
)
from rotorchain.typing import OperatorLike, Real


def check_is_float_int(param: object, param_name: Optional[Union[str, None]] = None) -> None:
    """Check if a parameter has a float or integer value.

    Parameters
    ----------
    param : object
        Object instance to check.
    param_name : str, default: None
        Parameter name (if any).

    Raises
    ------
    TypeError
        If the parameter does not have a float or integer value.
    """
    if isinstance(param, bool) or not isinstance(param, (int, float, np.integer, np.floating)):
        raise TypeError(
            "The parameter should have a float or integer value."
            if param_name is None
            else f"The parameter '{param_name}' should have a float or integer value."
        )


def check_positive(param: Real, param_name: Optional[str] = None) -> None:
    """Check if a real parameter is strictly positive.

    Raises
    ------
    ValueError
        If the parameter is zero, negative or not finite.
    """
    check_is_float_int(param, param_name)
    if not np.isfinite(param) or param <= 0:
        raise ValueError(
            "The parameter should be a finite positive value."
            if param_name is None
            else f"The parameter '{param_name}' should be a finite positive value, got {param}."
        )


def check_in_interval(
    param: Real, lower: Real, upper: Real, param_name: Optional[str] = None
) -> None:
    """Check if a real parameter lies in the closed interval ``[lower, upper]``.

    Raises
    ------
    ValueError
        If the parameter is outside the interval.
    """
    check_is_float_int(param, param_name)
    if not lower <= param <= upper:
        name = "The parameter" if param_name is None else f"The parameter '{param_name}'"
        raise ValueError(f"{name} should lie in [{lower}, {upper}], got {param}.")


def check_site(site: int, n_sites: int) -> None:
    """Check if a 1-based rotor index addresses one of ``n_sites`` rotors.

    Raises
    ------
    ValueError
        If the site is outside ``[1, n_sites]``.
    """
    if not 1 <= site <= n_sites:
        raise ValueError(f"Site {site} is out of range, it should lie in [1, {n_sites}].")


def check_square(matrix: OperatorLike, dimension: Optional[int] = None) -> None:
    """Check if a matrix is square and, optionally, of a given dimension.

    Raises
    ------
    ValueError
        If the matrix is not square or its dimension does not match.
    """
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}.")
    if dimension is not None and matrix.shape[0] != dimension:
        raise ValueError(f"Expected dimension {dimension}, got {matrix.shape[0]}.")


def check_hermitian(matrix: OperatorLike, tolerance: Real, name: str = "matrix") -> None:
    """Check if a matrix is Hermitian within ``tolerance``.

    Raises
    ------
    ValueError
        If ``A - A^H`` has an entry larger than the tolerance.
    """
    if not Accuracy.is_hermitian(matrix, tolerance):
        raise ValueError(f"The {name} is not Hermitian within {tolerance}.")


def check_density_matrix(
    rho: np.ndarray,
    trace_tolerance: Real = TRACE_ACCURACY,
    positivity_tolerance: Optional[Real] = POSITIVITY_ACCURACY,
) -> None:
    """Check the defining properties of a density matrix.

    Parameters
    ----------
    rho : ~numpy.ndarray
        Candidate density matrix.
    trace_tolerance : Real, default: TRACE_ACCURACY
        Tolerance for the unit trace and for Hermiticity.
    positivity_tolerance : Real, default: POSITIVITY_ACCURACY
        Lowest admissible eigenvalue, negated. ``None`` skips the spectral check.

    Raises
    ------
    ValueError
        If the matrix is not square, not Hermitian, not of unit trace or not positive.
    """
    check_square(rho)
    check_hermitian(rho, trace_tolerance, "density matrix")
    trace = np.trace(rho)
    if abs(trace - 1.0) > trace_tolerance:
        raise ValueError(f"The density matrix has trace {trace.real:.3e}, expected 1.")
    if positivity_tolerance is not None:
        lowest = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
        if lowest < -positivity_tolerance:
            raise ValueError(f"The density matrix has a negative eigenvalue {lowest:.3e}.")
