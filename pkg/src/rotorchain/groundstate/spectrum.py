# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the low-lying spectrum of the chain Hamiltonians."""

from dataclasses import dataclass
from enum import Enum, unique

from beartype import beartype as check_input_types
from beartype.typing import Optional, Union
import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from rotorchain.clockops.operators import ManyBodyOperator
from rotorchain.errors import SolverConvergenceError, protect_linalg
from rotorchain.logger import LOG
from rotorchain.misc.accuracy import EIGEN_ACCURACY, OPERATOR_ACCURACY
from rotorchain.misc.defaults import DENSE_LIMIT
from rotorchain.model.hamiltonian import HamiltonianSplit, build_hamiltonian
from rotorchain.model.params import CCMParams, Variant
from rotorchain.model.symmetry import build_symmetry_projector

START_SEED = 7
"""Seed of the random Lanczos start vector."""


@unique
class Sector(Enum):
    """Provides an enum holding the Hilbert spaces an eigensolve can run in."""

    FULL = "full"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class SpectrumResult:
    """Lowest eigenpairs of a Hamiltonian.

    Parameters
    ----------
    energies : ~numpy.ndarray
        Ascending eigenvalues.
    states : ~numpy.ndarray
        Matching orthonormal eigenvectors as columns, in the full Hilbert space.
    sector : Sector
        Space the eigensolve ran in.
    """

    energies: np.ndarray
    states: np.ndarray
    sector: Sector

    @property
    def ground_energy(self) -> float:
        """Lowest eigenvalue."""
        return float(self.energies[0])

    @property
    def ground_state(self) -> np.ndarray:
        """Eigenvector of the lowest eigenvalue."""
        return self.states[:, 0]

    @property
    def gap(self) -> float:
        """Difference between the two lowest eigenvalues."""
        if self.energies.size < 2:
            raise ValueError("The gap needs at least two eigenpairs.")
        return float(self.energies[1] - self.energies[0])

    @property
    def degeneracy(self) -> int:
        """Number of computed levels within ``EIGEN_ACCURACY`` of the ground energy."""
        return int(np.sum(self.energies - self.energies[0] < EIGEN_ACCURACY))


def _sector_matrix(H: Union[HamiltonianSplit, ManyBodyOperator], sector: Sector):
    """Return the matrix to diagonalize and the map back to the full space."""
    if sector is Sector.FULL:
        operator = H.H if isinstance(H, HamiltonianSplit) else H
        return operator.matrix, None
    if not isinstance(H, HamiltonianSplit):
        raise ValueError("A symmetric-sector solve needs a HamiltonianSplit.")
    projector = build_symmetry_projector(H.params)
    return projector.project(H.H), projector


@protect_linalg
@check_input_types
def lowest_eigenpairs(
    H: Union[HamiltonianSplit, ManyBodyOperator],
    k: int = 2,
    sector: Sector = Sector.FULL,
    dense_limit: int = DENSE_LIMIT,
) -> SpectrumResult:
    """Compute the ``k`` lowest eigenpairs of a Hamiltonian.

    Matrices with imaginary parts below ``OPERATOR_ACCURACY`` are diagonalized in
    real arithmetic, so their eigenvectors are real. Dimensions up to
    ``dense_limit`` are diagonalized densely; larger ones with the implicitly
    restarted Lanczos method of ARPACK.

    Parameters
    ----------
    H : HamiltonianSplit or ManyBodyOperator
        Hamiltonian. A symmetric-sector solve requires a rotated-variant split.
    k : int, default: 2
        Number of eigenpairs.
    sector : Sector, default: Sector.FULL
        Space of the solve. Symmetric-sector states are lifted to the full space.
    dense_limit : int, default: DENSE_LIMIT
        Largest dimension diagonalized densely.

    Returns
    -------
    SpectrumResult
        Ascending eigenpairs.

    Raises
    ------
    SolverConvergenceError
        If ARPACK does not converge or an eigenpair residual is too large.
    """
    matrix, projector = _sector_matrix(H, sector)
    dimension = matrix.shape[0]
    if not 1 <= k <= dimension:
        raise ValueError(f"Cannot compute {k} eigenpairs of a {dimension}-dimensional matrix.")
    if matrix.nnz == 0 or np.abs(matrix.data.imag).max() <= OPERATOR_ACCURACY:
        matrix = sp.csr_matrix(matrix.real)

    if dimension <= dense_limit or k >= dimension - 1:
        LOG.debug(f"Dense eigensolve of dimension {dimension}")
        energies, states = np.linalg.eigh(matrix.toarray())
        energies, states = energies[:k], states[:, :k]
    else:
        LOG.debug(f"Lanczos eigensolve of dimension {dimension} for {k} pairs")
        # A symmetric start vector would confine Lanczos to one symmetry sector.
        start = np.random.default_rng(START_SEED).standard_normal(dimension).astype(matrix.dtype)
        energies, states = eigsh(matrix, k=k, which="SA", v0=start, tol=0)
        order = np.argsort(energies)
        energies, states = energies[order], states[:, order]

    residual = np.linalg.norm(matrix @ states - states * energies, axis=0).max()
    scale = max(1.0, np.abs(energies).max())
    if residual > EIGEN_ACCURACY * scale:
        raise SolverConvergenceError(
            f"Eigenpair residual {residual:.2e} exceeds {EIGEN_ACCURACY * scale:.1e}.",
            best=(energies, states),
        )
    if projector is not None:
        states = projector.lift(states)
    return SpectrumResult(energies=energies, states=np.asarray(states), sector=sector)


def default_sector(params: CCMParams) -> Sector:
    """Return the symmetric sector for the rotated variant and the full space otherwise."""
    return Sector.SYMMETRIC if params.variant is Variant.ROTATED else Sector.FULL


@check_input_types
def ground_state(
    model: Union[CCMParams, HamiltonianSplit], k: int = 2, sector: Optional[Sector] = None
) -> SpectrumResult:
    """Return the lowest eigenpairs in the space where the ground state is unique.

    The rotated variant is solved in its symmetric sector and the states are lifted
    back to the full space. The standard variant is solved in the full space.
    """
    split = model if isinstance(model, HamiltonianSplit) else build_hamiltonian(model)
    sector = sector or default_sector(split.params)
    return lowest_eigenpairs(split, k=k, sector=sector)
