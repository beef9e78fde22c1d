# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the clock order parameter and the Binder cumulant.

The order parameter follows the frame of the Hamiltonian. In the standard variant it
is ``m = (1/M) sum_j (mu_j + mu_j^†)``, diagonal in the clock basis. The rotated
variant exchanges the roles of ``sigma`` and ``mu``, so there
``m = (1/M) sum_j (sigma_j + sigma_j^†)``. This operator changes the
``Z_{N_s}`` charge, and its mean vanishes on every symmetric-sector state.
"""

from dataclasses import dataclass
from itertools import combinations

from beartype import beartype as check_input_types
from beartype.typing import Dict, Optional, Tuple, Union
import numpy as np
from scipy.sparse import diags

from rotorchain.clockops.basis import ClockParams
from rotorchain.clockops.operators import ManyBodyOperator, build_sigma, embed_local, zero
from rotorchain.groundstate.spectrum import ground_state
from rotorchain.model.params import CCMParams, Variant
from rotorchain.typing import Real


def order_parameter_values(clock: ClockParams) -> np.ndarray:
    """Return the diagonal of ``m = (1/M) sum_j (mu_j + mu_j^†)``.

    On ``|k_1 ... k_M>`` the order parameter is ``(1/M) sum_j 2 cos(2 pi k_j / N_s)``.
    """
    return np.mean(2.0 * np.cos(2.0 * np.pi * clock.digits / clock.N_s), axis=1)


def _clock(params: Union[ClockParams, CCMParams]) -> ClockParams:
    return params.clock if isinstance(params, CCMParams) else params


def _variant(params: Union[ClockParams, CCMParams], variant: Optional[Variant]) -> Variant:
    if variant is not None:
        return variant
    return params.variant if isinstance(params, CCMParams) else Variant.STANDARD


@check_input_types
def order_parameter(
    params: Union[ClockParams, CCMParams], variant: Optional[Variant] = None
) -> ManyBodyOperator:
    """Return the order parameter ``m`` of a chain.

    Parameters
    ----------
    params : ClockParams or CCMParams
        Chain size, or model parameters carrying the variant.
    variant : Variant, default: None
        Frame of the order parameter. Taken from ``params`` when it is a
        ``CCMParams``, and the standard frame otherwise.
    """
    clock = _clock(params)
    if _variant(params, variant) is Variant.STANDARD:
        return ManyBodyOperator(diags(order_parameter_values(clock), format="csr"), clock, True)
    sigma = build_sigma(clock.N_s)
    local = sigma + sigma.conj().T
    total = zero(clock)
    for site in range(1, clock.M + 1):
        total = total + embed_local(local, site, clock)
    return ManyBodyOperator(total.matrix / clock.M, clock, True)


def _is_vector(state: np.ndarray) -> bool:
    return state.ndim == 1 or (state.ndim == 2 and 1 in state.shape)


def _weights(state: np.ndarray, clock: ClockParams) -> np.ndarray:
    state = np.asarray(state)
    if _is_vector(state):
        weights = np.abs(state.ravel()) ** 2
    else:
        weights = np.real(np.diagonal(state))
    if weights.size != clock.dimension:
        raise ValueError(f"Expected a state of dimension {clock.dimension}, got {weights.size}.")
    return weights


def _moments(state: np.ndarray, operator: ManyBodyOperator) -> Tuple[float, float, float]:
    # <m>, <m^2>, <m^4> of an off-diagonal order parameter
    state = np.asarray(state)
    if _is_vector(state):
        vector = state.ravel()
        if vector.size != operator.dimension:
            raise ValueError(
                f"Expected a state of dimension {operator.dimension}, got {vector.size}."
            )
        once = operator.apply(vector)
        twice = operator.apply(once)
        return (
            float(np.vdot(vector, once).real),
            float(np.vdot(once, once).real),
            float(np.vdot(twice, twice).real),
        )
    if state.shape != (operator.dimension, operator.dimension):
        raise ValueError(f"Expected a state of dimension {operator.dimension}, got {state.shape}.")
    square = operator @ operator
    squared_state = square.apply(state)
    return (
        float(operator.expectation(state).real),
        float(np.trace(squared_state).real),
        float(np.trace(square.apply(squared_state)).real),
    )


def order_parameter_mean(
    state: np.ndarray,
    params: Union[ClockParams, CCMParams],
    variant: Optional[Variant] = None,
) -> float:
    """Return ``<m>`` for a state vector or a density matrix."""
    clock = _clock(params)
    if _variant(params, variant) is Variant.STANDARD:
        return float(np.dot(_weights(state, clock), order_parameter_values(clock)))
    return _moments(state, order_parameter(clock, Variant.ROTATED))[0]


@check_input_types
def order_parameter_moments(
    state: np.ndarray,
    params: Union[ClockParams, CCMParams],
    variant: Optional[Variant] = None,
) -> Tuple[float, float]:
    """Return ``(<m^2>, <m^4>)`` for a normalized state vector or a density matrix."""
    clock = _clock(params)
    if _variant(params, variant) is Variant.STANDARD:
        weights = _weights(state, clock)
        values = order_parameter_values(clock)
        return float(np.dot(weights, values**2)), float(np.dot(weights, values**4))
    _, m2, m4 = _moments(state, order_parameter(clock, Variant.ROTATED))
    return m2, m4


@check_input_types
def binder_cumulant(m2: Real, m4: Real) -> float:
    """Return ``B = (3 - <m^4> / <m^2>^2) / 2``.

    Raises
    ------
    ValueError
        If ``m2`` is not positive.
    """
    if m2 <= 0:
        raise ValueError(f"The second moment must be positive, got {m2}.")
    return 0.5 * (3.0 - m4 / m2**2)


@dataclass(frozen=True)
class BinderPoint:
    """Order-parameter moments of one ground state.

    Parameters
    ----------
    f : float
        Control parameter.
    M : int
        Number of rotors.
    m2 : float
        ``<m^2>``.
    m4 : float
        ``<m^4>``.
    """

    f: float
    M: int
    m2: float
    m4: float

    @property
    def B(self) -> float:
        """Binder cumulant."""
        return binder_cumulant(self.m2, self.m4)


@check_input_types
def binder_point(params: CCMParams) -> BinderPoint:
    """Return the moments of the ground state, taken in the symmetric sector when available.

    The order parameter is taken in the frame of ``params.variant``.
    """
    spectrum = ground_state(params, k=1)
    m2, m4 = order_parameter_moments(spectrum.ground_state, params)
    return BinderPoint(f=params.f, M=params.M, m2=m2, m4=m4)


def _crossings(f: np.ndarray, difference: np.ndarray) -> list:
    roots = []
    for i in range(len(f) - 1):
        left, right = difference[i], difference[i + 1]
        if left == 0.0:
            roots.append(float(f[i]))
        elif left * right < 0.0:
            roots.append(float(f[i] - left * (f[i + 1] - f[i]) / (right - left)))
    if len(f) and difference[-1] == 0.0:
        roots.append(float(f[-1]))
    return roots


@check_input_types
def binder_crossings(curves: Dict[int, Tuple[np.ndarray, np.ndarray]]) -> list:
    """Locate the crossings of the Binder curves of every pair of chain lengths.

    The curve of the larger chain is interpolated onto the grid of the smaller one
    and the crossings are the linear-interpolation roots of their difference.

    Parameters
    ----------
    curves : dict
        ``{M: (f_grid, B)}`` with ascending grids.

    Returns
    -------
    list
        ``(M, M', f_cross)`` triples with ``M < M'``, sorted.
    """
    crossings = []
    for small, large in combinations(sorted(curves), 2):
        f_small, b_small = (np.asarray(a, dtype=float) for a in curves[small])
        f_large, b_large = (np.asarray(a, dtype=float) for a in curves[large])
        difference = b_small - np.interp(f_small, f_large, b_large)
        crossings.extend((small, large, root) for root in _crossings(f_small, difference))
    return sorted(crossings)
