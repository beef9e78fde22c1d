# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the tunneling and thermal rotational currents of the rotors.

Currents are oriented along increasing clock index: the current ``j -> j'`` is
reported for ``j' = j + 1``.
"""

from dataclasses import dataclass

from beartype import beartype as check_input_types
from beartype.typing import Union
import numpy as np
import scipy.sparse as sp

from rotorchain.clockops.basis import ClockParams
from rotorchain.clockops.operators import ManyBodyOperator, local_projector
from rotorchain.errors import StationarityError
from rotorchain.lindblad.transitions import TransitionSet
from rotorchain.logger import LOG
from rotorchain.misc.accuracy import CURRENT_ACCURACY, IMAGINARY_ACCURACY
from rotorchain.misc.checks import check_site
from rotorchain.model.hamiltonian import HamiltonianSplit


def real_expectation(operator: ManyBodyOperator, rho: np.ndarray) -> float:
    """Return ``Tr(rho A)`` after checking its imaginary part is below ``IMAGINARY_ACCURACY``."""
    value = operator.expectation(rho)
    if abs(value.imag) > IMAGINARY_ACCURACY:
        raise ValueError(f"The expectation value has an imaginary part {value.imag:.3e}.")
    return value.real


def _check_pair(j: int, j_prime: int, clock: ClockParams):
    if j == j_prime:
        raise ValueError(f"A current needs two distinct clock states, got {j} twice.")
    for state in (j, j_prime):
        if not 0 <= state < clock.N_s:
            raise ValueError(f"Clock state {state} is outside [0, {clock.N_s - 1}].")


def _hamiltonian(H: Union[HamiltonianSplit, ManyBodyOperator]) -> ManyBodyOperator:
    return H.H if isinstance(H, HamiltonianSplit) else H


@check_input_types
def tunneling_current_operator(
    H: Union[HamiltonianSplit, ManyBodyOperator], site: int, j: int, j_prime: int
) -> ManyBodyOperator:
    """Return ``J^tun = i (x_j H x_j' - x_j' H x_j)`` of one rotor.

    ``x_k`` projects the rotor at ``site`` onto clock state ``k``.
    """
    H = _hamiltonian(H)
    clock = H.params
    check_site(site, clock.M)
    _check_pair(j, j_prime, clock)
    x_j = local_projector(site, j, clock).matrix
    x_jp = local_projector(site, j_prime, clock).matrix
    forward = x_j @ H.matrix @ x_jp
    return ManyBodyOperator(1j * (forward - forward.conj().T), clock, hermitian=True)


@check_input_types
def thermal_current_operator(
    transitions: TransitionSet, site: int, j: int, j_prime: int, restrict_to_site: bool = False
) -> ManyBodyOperator:
    """Return the bath-induced current operator ``J^th`` of one rotor.

    For jumps ``L = |a><b|`` with rate ``W`` the operator
    ``1/2 sum W ({x_j, L^† x_j' L} - {x_j', L^† x_j L})`` is diagonal, with entry
    ``W ([b_m = j][a_m = j'] - [b_m = j'][a_m = j])`` summed on ``|b><b|``. Jumps of
    other rotors leave ``k_m`` unchanged and contribute zero.

    Parameters
    ----------
    transitions : TransitionSet
        Jumps of all baths.
    site : int
        1-based rotor.
    j, j_prime : int
        Distinct clock states.
    restrict_to_site : bool, default: False
        Sum only the jumps of ``site`` instead of all jumps.
    """
    clock = transitions.clock
    check_site(site, clock.M)
    _check_pair(j, j_prime, clock)
    if restrict_to_site:
        transitions = transitions.for_site(site)
    source_digit = clock.digits[transitions.sources, site - 1]
    target_digit = clock.digits[transitions.targets, site - 1]
    weight = transitions.rates * (
        ((source_digit == j) & (target_digit == j_prime)).astype(float)
        - ((source_digit == j_prime) & (target_digit == j)).astype(float)
    )
    diagonal = np.bincount(transitions.sources, weights=weight, minlength=clock.dimension)
    return ManyBodyOperator(sp.diags(diagonal, format="csr"), clock, hermitian=True)


@check_input_types
def tunneling_current(
    rho: np.ndarray,
    H: Union[HamiltonianSplit, ManyBodyOperator],
    site: int,
    j: int,
    j_prime: int,
) -> float:
    """Return ``<J^tun_{j -> j'}>`` of the rotor at ``site`` in the state ``rho``."""
    return real_expectation(tunneling_current_operator(H, site, j, j_prime), rho)


@check_input_types
def thermal_current(
    rho: np.ndarray, transitions: TransitionSet, site: int, j: int, j_prime: int
) -> float:
    """Return ``<J^th_{j -> j'}>`` of the rotor at ``site`` in the state ``rho``.

    On a diagonal state this is the classical current ``W_{j'j} p_j - W_{jj'} p_j'``.
    """
    return real_expectation(thermal_current_operator(transitions, site, j, j_prime), rho)


@check_input_types
def mean_square_current(rho: np.ndarray, current_operator: ManyBodyOperator) -> float:
    """Return ``Tr(rho J^2)`` for a current operator ``J``."""
    return real_expectation(current_operator @ current_operator, rho)


@dataclass(frozen=True)
class CurrentRecord:
    """Rotational currents of every rotor and their totals.

    Parameters
    ----------
    per_rotor_tun : tuple
        Tunneling current of every rotor.
    per_rotor_th : tuple
        Thermal current of every rotor.
    """

    per_rotor_tun: tuple
    per_rotor_th: tuple

    @property
    def total_tun(self) -> float:
        """Sum of the tunneling currents."""
        return float(np.sum(self.per_rotor_tun))

    @property
    def total_th(self) -> float:
        """Sum of the thermal currents."""
        return float(np.sum(self.per_rotor_th))

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the CurrentRecord class."""
        return {
            "per_rotor_tun": list(self.per_rotor_tun),
            "per_rotor_th": list(self.per_rotor_th),
            "total_tun": self.total_tun,
            "total_th": self.total_th,
        }


def _rotor_currents(rho, H, transitions, j, j_prime) -> tuple:
    M = transitions.clock.M
    tunneling = [tunneling_current(rho, H, m, j, j_prime) for m in range(1, M + 1)]
    thermal = [thermal_current(rho, transitions, m, j, j_prime) for m in range(1, M + 1)]
    return np.array(tunneling), np.array(thermal)


@check_input_types
def steady_currents(
    rho_ss: np.ndarray,
    H: Union[HamiltonianSplit, ManyBodyOperator],
    transitions: TransitionSet,
    check_independence: bool = True,
    tolerance: float = CURRENT_ACCURACY,
) -> CurrentRecord:
    """Evaluate the currents ``0 -> 1`` of every rotor in a steady state.

    In a steady state of a model that is invariant under a global clock shift,
    the current of a rotor does not depend on the pair of neighbouring states it
    is evaluated on. The currents ``k -> k + 1`` for every other ``k`` are
    compared against ``0 -> 1``.

    Parameters
    ----------
    rho_ss : ~numpy.ndarray
        Steady state.
    H : HamiltonianSplit or ManyBodyOperator
        Hamiltonian of the chain.
    transitions : TransitionSet
        Jumps of all baths.
    check_independence : bool, default: True
        Whether to run the comparison. Models without the global shift
        symmetry, such as the rotated variant, should skip it.
    tolerance : float, default: CURRENT_ACCURACY
        Largest accepted disagreement.

    Raises
    ------
    StationarityError
        If the currents of a rotor depend on the pair of states.
    """
    tunneling, thermal = _rotor_currents(rho_ss, H, transitions, 0, 1)
    if check_independence:
        N_s = transitions.clock.N_s
        for k in range(1, N_s):
            other_tun, other_th = _rotor_currents(rho_ss, H, transitions, k, (k + 1) % N_s)
            mismatch = max(np.abs(other_tun - tunneling).max(), np.abs(other_th - thermal).max())
            if mismatch > tolerance:
                raise StationarityError(
                    f"Currents {k}->{(k + 1) % N_s} differ from 0->1 by {mismatch:.3e}; "
                    "the input is not a steady state of a shift-symmetric model."
                )
    record = CurrentRecord(tuple(tunneling.tolist()), tuple(thermal.tolist()))
    LOG.debug(f"Total currents: tunneling {record.total_tun:.3e}, thermal {record.total_th:.3e}")
    return record
