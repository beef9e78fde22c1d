# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the heat currents exchanged with every bath and the entropy production."""

from dataclasses import dataclass

from beartype import beartype as check_input_types
from beartype.typing import Sequence, Tuple
import numpy as np

from rotorchain.clockops.operators import ManyBodyOperator
from rotorchain.errors import StationarityError
from rotorchain.lindblad.baths import BathConfig
from rotorchain.lindblad.liouvillian import Liouvillian
from rotorchain.logger import LOG
from rotorchain.misc.accuracy import CURRENT_ACCURACY, IMAGINARY_ACCURACY
from rotorchain.model.hamiltonian import HamiltonianSplit

SECOND_LAW_ACCURACY = 1e-12
"""Most negative entropy production accepted without a warning."""


def sublattice_sums(values: Sequence[float]) -> Tuple[float, float]:
    """Return the sums over even and over odd rotors, with rotors numbered from 1."""
    values = np.asarray(values, dtype=float)
    return float(values[1::2].sum()), float(values[0::2].sum())


def _dual_expectation(rho: np.ndarray, L: Liouvillian, site: int, X: ManyBodyOperator) -> float:
    """Return ``Tr(rho D*_m(X))``."""
    value = complex(np.sum(L.apply_dual(site, X).T * np.asarray(rho)))
    if abs(value.imag) > IMAGINARY_ACCURACY:
        raise ValueError(f"The heat current has an imaginary part {value.imag:.3e}.")
    return value.real


@dataclass(frozen=True)
class HeatRecord:
    """Heat currents entering the chain from every bath.

    Positive values flow from the bath into the chain.

    Parameters
    ----------
    qdot_d : tuple
        Heat current of every bath through the diagonal Hamiltonian part.
    qdot_nd : tuple
        Heat current of every bath through the off-diagonal Hamiltonian part.
    entropy_production : float
        ``-sum_m beta_m Qdot_{D,m}``, the entropy production rate of a steady state.
    """

    qdot_d: tuple
    qdot_nd: tuple
    entropy_production: float

    @property
    def qdot_standard(self) -> tuple:
        """Heat current of every bath through the full Hamiltonian, ``Qdot_D + Qdot_ND``."""
        return tuple(d + nd for d, nd in zip(self.qdot_d, self.qdot_nd))

    @property
    def first_law_residual(self) -> float:
        """Total energy flowing into the chain; zero in a steady state."""
        return float(np.sum(self.qdot_d) + np.sum(self.qdot_nd))

    @property
    def qdot_d_sublattices(self) -> Tuple[float, float]:
        """Diagonal heat currents summed over even and odd rotors."""
        return sublattice_sums(self.qdot_d)

    @property
    def qdot_nd_sublattices(self) -> Tuple[float, float]:
        """Off-diagonal heat currents summed over even and odd rotors."""
        return sublattice_sums(self.qdot_nd)

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the HeatRecord class."""
        return {
            "qdot_d": list(self.qdot_d),
            "qdot_nd": list(self.qdot_nd),
            "qdot_standard": list(self.qdot_standard),
            "entropy_production": self.entropy_production,
        }


@check_input_types
def heat_currents(
    rho_ss: np.ndarray,
    split: HamiltonianSplit,
    liouvillian: Liouvillian,
    baths: BathConfig,
    tolerance: float = CURRENT_ACCURACY,
) -> HeatRecord:
    """Evaluate ``Qdot_{D,m} = Tr(rho D*_m(H_D))`` and ``Qdot_{ND,m} = Tr(rho D*_m(H_ND))``.

    In a steady state the entropy of the chain is constant, so the entropy
    production reduces to ``-sum_m beta_m Qdot_{D,m}``.

    Parameters
    ----------
    rho_ss : ~numpy.ndarray
        Steady state.
    split : HamiltonianSplit
        Hamiltonian and its diagonal split.
    liouvillian : Liouvillian
        Generator holding one dissipator per bath.
    baths : BathConfig
        Inverse temperatures of the baths.
    tolerance : float, default: CURRENT_ACCURACY
        Largest accepted first-law residual.

    Raises
    ------
    StationarityError
        If the heat currents do not sum to zero within ``tolerance``.
    """
    if baths.M != split.params.M:
        raise ValueError(f"Expected {split.params.M} baths, got {baths.M}.")
    sites = range(1, baths.M + 1)
    qdot_d = tuple(_dual_expectation(rho_ss, liouvillian, m, split.H_D) for m in sites)
    qdot_nd = tuple(_dual_expectation(rho_ss, liouvillian, m, split.H_ND) for m in sites)
    entropy_production = -float(np.dot(baths.beta_array, qdot_d))
    record = HeatRecord(qdot_d, qdot_nd, entropy_production)

    if abs(record.first_law_residual) > tolerance:
        raise StationarityError(
            f"The heat currents sum to {record.first_law_residual:.3e}; "
            "the input is not a steady state."
        )
    if entropy_production < -SECOND_LAW_ACCURACY:
        LOG.warning(f"Negative entropy production {entropy_production:.3e}")
    return record


@check_input_types
def standard_heat_currents(
    rho_ss: np.ndarray, split: HamiltonianSplit, liouvillian: Liouvillian
) -> tuple:
    """Return ``Qdot_m = Tr(rho D*_m(H))`` of every bath, without the diagonal split."""
    return tuple(
        _dual_expectation(rho_ss, liouvillian, m, split.H) for m in range(1, split.params.M + 1)
    )
