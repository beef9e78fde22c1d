# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the linear response of the steady state to a temperature gradient."""

from dataclasses import asdict, dataclass

from beartype import beartype as check_input_types
from beartype.typing import Optional
import numpy as np

from rotorchain.infotheory.measures import Partition, mutual_information
from rotorchain.lindblad.baths import BathConfig
from rotorchain.lindblad.steady import build_ness
from rotorchain.logger import LOG
from rotorchain.misc.checks import check_is_float_int
from rotorchain.misc.options import SolverOptions
from rotorchain.model.params import CCMParams, Variant
from rotorchain.observables.currents import steady_currents
from rotorchain.typing import Real

DEFAULT_DELTA_T = 1e-3
"""Default temperature step of the finite difference."""


@dataclass(frozen=True)
class SusceptibilityRecord:
    """Forward-difference response to a temperature difference ``Delta T``.

    Parameters
    ----------
    current : float
        ``(<J^th(Delta T)>_T - <J^th(0)>_T) / Delta T``.
    mutual_information : float
        ``(I(A:B)(Delta T) - I(A:B)(0)) / Delta T``.
    delta_t : float
        Temperature step.
    """

    current: float
    mutual_information: float
    delta_t: float

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the SusceptibilityRecord class."""
        return asdict(self)


def gradient_baths(M: int, beta_e: Real, delta_t: Real, g: Real) -> BathConfig:
    """Return staggered baths with ``T_o = T_e + delta_t`` on the odd rotors."""
    temperature_o = 1.0 / beta_e + delta_t
    if temperature_o <= 0:
        raise ValueError(f"The odd-rotor temperature {temperature_o} is not positive.")
    return BathConfig.staggered(M, beta_e, 1.0 / temperature_o, g)


@check_input_types
def current_susceptibility(
    params: CCMParams,
    baths: BathConfig,
    delta_t: Real = DEFAULT_DELTA_T,
    partition: Optional[Partition] = None,
    options: Optional[SolverOptions] = None,
) -> SusceptibilityRecord:
    """Return the susceptibilities of the total thermal current and of the mutual information.

    The even-rotor inverse temperature ``beta_e`` and the rate ``g`` are read from
    ``baths``. Both the reference point (all baths at ``beta_e``) and the displaced
    point (odd baths at ``T_e + delta_t``) are solved.

    Parameters
    ----------
    params : CCMParams
        Model parameters.
    baths : BathConfig
        Baths providing ``beta_e`` (on rotor 2) and ``g``.
    delta_t : Real, default: 1e-3
        Temperature step, non-zero.
    partition : Partition, default: None
        Bipartition of the mutual information. Half chain when ``None``.
    options : SolverOptions, default: None
        Steady-state solver settings.

    Raises
    ------
    ValueError
        If ``delta_t`` is zero.
    """
    check_is_float_int(delta_t, "delta_t")
    if delta_t == 0:
        raise ValueError("The temperature step must be non-zero.")
    beta_e = baths.beta_of(2)
    partition = partition or Partition.half_chain(params.M)
    check_shift = params.variant is Variant.STANDARD

    values = []
    for step in (0.0, delta_t):
        solution = build_ness(params, gradient_baths(params.M, beta_e, step, baths.g), options)
        currents = steady_currents(
            solution.rho, solution.split, solution.transitions, check_independence=check_shift
        )
        information = mutual_information(solution.rho, partition, params.clock)
        values.append((currents.total_th, information))

    (current_0, information_0), (current_1, information_1) = values
    record = SusceptibilityRecord(
        current=float((current_1 - current_0) / delta_t),
        mutual_information=float((information_1 - information_0) / delta_t),
        delta_t=float(delta_t),
    )
    LOG.debug(f"Susceptibilities at f={params.f}: {record}")
    return record


def susceptibility_curve(
    params: CCMParams, baths: BathConfig, f_grid: np.ndarray, delta_t: Real = DEFAULT_DELTA_T
) -> list:
    """Return one :class:`SusceptibilityRecord` per control parameter of ``f_grid``."""
    return [current_susceptibility(params.with_f(float(f)), baths, delta_t) for f in f_grid]
