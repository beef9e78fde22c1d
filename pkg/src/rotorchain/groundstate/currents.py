# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the tunneling currents carried by chain ground states."""

from beartype import beartype as check_input_types
from beartype.typing import Sequence, Union
import numpy as np

from rotorchain.groundstate.spectrum import ground_state
from rotorchain.misc.accuracy import IMAGINARY_ACCURACY
from rotorchain.model.hamiltonian import HamiltonianSplit, build_hamiltonian
from rotorchain.model.params import CCMParams, Variant
from rotorchain.observables.currents import tunneling_current_operator
from rotorchain.typing import Real


def _pure_expectation(operator, state: np.ndarray) -> float:
    value = np.vdot(state, operator.apply(state))
    if abs(value.imag) > IMAGINARY_ACCURACY:
        raise ValueError(f"The expectation value has an imaginary part {value.imag:.3e}.")
    return float(value.real)


@check_input_types
def ground_state_currents(
    model: Union[CCMParams, HamiltonianSplit], j: int = 0, j_prime: int = 1
) -> tuple:
    """Return ``<J^tun_{j -> j'}>`` of every rotor in the ground state.

    The rotated variant is evaluated on its symmetric-sector ground state, which
    stays unique where the full-space level is nearly degenerate.
    """
    split = model if isinstance(model, HamiltonianSplit) else build_hamiltonian(model)
    state = ground_state(split, k=1).ground_state
    return tuple(
        _pure_expectation(tunneling_current_operator(split, m, j, j_prime), state)
        for m in range(1, split.params.M + 1)
    )


@check_input_types
def ground_tunneling_current(params: CCMParams, f_grid: Sequence[Real]) -> list:
    """Return the per-rotor ground-state tunneling currents of the rotated model along ``f_grid``.

    Neighbouring rotors carry opposite currents. On a finite chain the current
    decays smoothly past the transition rather than vanishing, and the decay
    steepens with ``M``.

    Raises
    ------
    ValueError
        If ``params`` describes the standard variant.
    """
    if params.variant is not Variant.ROTATED:
        raise ValueError("Ground-state currents are defined for the rotated variant.")
    return [ground_state_currents(params.with_f(float(f))) for f in f_grid]
