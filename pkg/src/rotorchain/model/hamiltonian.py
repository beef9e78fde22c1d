# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the chiral clock Hamiltonians and their diagonal split."""

from dataclasses import dataclass

from beartype import beartype as check_input_types
import numpy as np

from rotorchain.clockops.operators import (
    ManyBodyOperator,
    build_mu,
    build_sigma,
    embed_local,
    two_site_bond,
    zero,
)
from rotorchain.logger import LOG
from rotorchain.misc.accuracy import DIAGONAL_ACCURACY, Accuracy
from rotorchain.model.params import CCMParams, Variant


@dataclass(frozen=True)
class HamiltonianSplit:
    """A Hamiltonian with its diagonal and off-diagonal parts in the clock basis.

    Parameters
    ----------
    H : ManyBodyOperator
        Full Hamiltonian, ``H = H_D + H_ND``.
    H_D : ManyBodyOperator
        Diagonal part.
    H_ND : ManyBodyOperator
        Part with zero diagonal.
    params : CCMParams
        Model parameters the operators were built from.
    """

    H: ManyBodyOperator
    H_D: ManyBodyOperator
    H_ND: ManyBodyOperator
    params: CCMParams

    def __post_init__(self):
        """Check the split structure."""
        if not Accuracy.is_diagonal(self.H_D.matrix):
            raise ValueError("The diagonal part has off-diagonal entries.")
        if np.any(self.H_ND.diagonal() != 0):
            raise ValueError("The off-diagonal part has a non-zero diagonal.")

    @property
    def dimension(self) -> int:
        """Hilbert dimension."""
        return self.H.dimension


def _on_site_sum(op: np.ndarray, params: CCMParams) -> ManyBodyOperator:
    """Return ``sum_j (op_j + op_j^†)``."""
    total = zero(params.clock)
    for site in range(1, params.M + 1):
        total = total + embed_local(op + op.conj().T, site, params.clock)
    return ManyBodyOperator(total.matrix, params.clock, hermitian=True)


def _bond_sum(op: np.ndarray, params: CCMParams) -> ManyBodyOperator:
    """Return ``sum_j (op_j op_{j+1}^† e^{i phi_j} + h.c.)`` with periodic wrap."""
    total = zero(params.clock)
    for site, next_site, phase in params.bonds():
        total = total + two_site_bond(op, site, op, next_site, phase, params.clock)
    return total


def _split(H_D: ManyBodyOperator, H_ND: ManyBodyOperator, params: CCMParams) -> HamiltonianSplit:
    H = H_D + H_ND
    LOG.debug(f"Built {params.variant.value} Hamiltonian with f={params.f}, nnz={H.nnz}")
    return HamiltonianSplit(H=H, H_D=H_D, H_ND=H_ND, params=params)


@check_input_types
def build_hccm(params: CCMParams) -> HamiltonianSplit:
    """Build the standard chiral clock Hamiltonian.

    ``H = -f sum_j (sigma_j + sigma_j^†) - (1 - f) sum_j (mu_j mu_{j+1}^† e^{i phi_j} + h.c.)``

    The interaction term is the diagonal part and the transverse term the
    off-diagonal part. With ``M = 2`` both bonds ``1 -> 2`` and ``2 -> 1`` are kept.

    Parameters
    ----------
    params : CCMParams
        Model parameters with ``variant = Variant.STANDARD``.

    Returns
    -------
    HamiltonianSplit
        Hamiltonian and its split.
    """
    if params.variant is not Variant.STANDARD:
        raise ValueError("build_hccm expects the standard variant.")
    H_D = -(1.0 - params.f) * _bond_sum(build_mu(params.N_s), params)
    H_ND = -params.f * _on_site_sum(build_sigma(params.N_s), params)
    return _split(H_D, H_ND, params)


@check_input_types
def build_hccm_rotated(params: CCMParams) -> HamiltonianSplit:
    """Build the rotated chiral clock Hamiltonian.

    ``H = -f sum_j (mu_j + mu_j^†) - (1 - f) sum_j (sigma_j sigma_{j+1}^† e^{i phi_j} + h.c.)``

    The transverse term is now diagonal and the interaction term off-diagonal.
    """
    if params.variant is not Variant.ROTATED:
        raise ValueError("build_hccm_rotated expects the rotated variant.")
    H_D = -params.f * _on_site_sum(build_mu(params.N_s), params)
    H_ND = -(1.0 - params.f) * _bond_sum(build_sigma(params.N_s), params)
    return _split(H_D, H_ND, params)


@check_input_types
def build_hamiltonian(params: CCMParams) -> HamiltonianSplit:
    """Build the Hamiltonian of the variant named in ``params``."""
    if params.variant is Variant.ROTATED:
        return build_hccm_rotated(params)
    return build_hccm(params)


@check_input_types
def diagonal_energies(split: HamiltonianSplit) -> np.ndarray:
    """Return the diagonal energies ``E_j = <j|H|j>`` as a real vector.

    Raises
    ------
    ValueError
        If a diagonal entry has an imaginary part above ``DIAGONAL_ACCURACY``.
    """
    diagonal = split.H.diagonal()
    imaginary = np.abs(diagonal.imag).max() if diagonal.size else 0.0
    if imaginary > DIAGONAL_ACCURACY:
        raise ValueError(f"The Hamiltonian diagonal has an imaginary part of {imaginary:.3e}.")
    return diagonal.real.copy()
