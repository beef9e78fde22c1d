# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the global clock symmetry and its invariant sector."""

from beartype import beartype as check_input_types
import numpy as np
import scipy.sparse as sp

from rotorchain.clockops.basis import ClockParams
from rotorchain.clockops.operators import ManyBodyOperator, clock_phase
from rotorchain.model.params import CCMParams, Variant
from rotorchain.typing import OperatorLike


@check_input_types
def symmetry_operator(clock: ClockParams) -> ManyBodyOperator:
    """Return the global symmetry ``U = prod_j mu_j^†``.

    ``U`` is diagonal with entry ``omega^(-sum_j k_j)`` on ``|k_1 ... k_M>``.
    """
    digit_sum = clock.digits.sum(axis=1)
    diagonal = clock_phase(clock.N_s) ** (-digit_sum)
    return ManyBodyOperator(sp.diags(diagonal, format="csr"), clock)


class SymmetryProjector:
    """Isometry onto the sector where the global symmetry has eigenvalue 1.

    The sector is spanned by the basis states whose digit sum is a multiple of
    ``N_s``. The isometry ``P`` has shape ``(D, D_0)`` and satisfies ``P^† P = 1``.

    Parameters
    ----------
    clock : ClockParams
        Chain size.
    """

    def __init__(self, clock: ClockParams):
        """Initialize the ``SymmetryProjector`` class."""
        indices = np.flatnonzero(clock.digits.sum(axis=1) % clock.N_s == 0)
        if indices.size == 0:
            raise ValueError(f"The symmetric sector of {clock} is empty.")
        indices.setflags(write=False)
        self._clock = clock
        self._indices = indices
        self._isometry = sp.csr_matrix(
            (np.ones(indices.size), (indices, np.arange(indices.size))),
            shape=(clock.dimension, indices.size),
            dtype=np.complex128,
        )

    @property
    def clock(self) -> ClockParams:
        """Chain size."""
        return self._clock

    @property
    def indices(self) -> np.ndarray:
        """Flat indices of the basis states spanning the sector."""
        return self._indices

    @property
    def dimension(self) -> int:
        """Sector dimension ``D_0``."""
        return int(self._indices.size)

    @property
    def isometry(self) -> sp.csr_matrix:
        """Sparse ``D x D_0`` isometry."""
        return self._isometry

    def project(self, H: OperatorLike) -> sp.csr_matrix:
        """Return the sector block ``P^† H P`` in sparse form."""
        matrix = H.matrix if isinstance(H, ManyBodyOperator) else sp.csr_matrix(H)
        return (self._isometry.conj().T @ matrix @ self._isometry).tocsr()

    def lift(self, vectors: np.ndarray) -> np.ndarray:
        """Map sector vectors (or columns of vectors) back to the full space."""
        return self._isometry @ vectors

    def __repr__(self) -> str:
        """Representation of the ``SymmetryProjector`` class."""
        return f"SymmetryProjector({self._clock}, D_0={self.dimension})"


@check_input_types
def build_symmetry_projector(params: CCMParams) -> SymmetryProjector:
    """Build the projector onto the symmetric sector of the rotated model.

    Raises
    ------
    ValueError
        If ``params`` describes the standard variant, which does not conserve ``U``.
    """
    if params.variant is not Variant.ROTATED:
        raise ValueError("The symmetric sector is only defined for the rotated variant.")
    return SymmetryProjector(params.clock)


def project_hamiltonian(projector: SymmetryProjector, H: OperatorLike) -> np.ndarray:
    """Return the dense sector Hamiltonian ``P^† H P``."""
    return projector.project(H).toarray()
