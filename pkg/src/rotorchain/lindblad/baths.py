# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the thermal baths attached to the rotors and their transition rates."""

from dataclasses import dataclass, replace

from beartype import beartype as check_input_types
from beartype.typing import Union
import numpy as np

from rotorchain.misc.checks import check_positive
from rotorchain.typing import Real, RealSequence


@dataclass(frozen=True)
class BathConfig:
    """Inverse temperatures of the local baths and their coupling rate.

    Parameters
    ----------
    beta : tuple
        Inverse temperature ``beta_m`` of the bath of every rotor, ``m = 1..M``.
    g : float
        Microscopic rate shared by all baths.
    """

    beta: tuple
    g: float

    def __post_init__(self):
        """Validate the bath parameters."""
        beta = tuple(self.beta)
        if not beta:
            raise ValueError("At least one bath is required.")
        for value in beta:
            check_positive(value, "beta")
        check_positive(self.g, "g")
        object.__setattr__(self, "beta", tuple(float(b) for b in beta))
        object.__setattr__(self, "g", float(self.g))

    @classmethod
    def staggered(cls, M: int, beta_e: Real, beta_o: Real, g: Real) -> "BathConfig":
        """Build baths alternating between ``beta_e`` on even and ``beta_o`` on odd rotors."""
        return cls(tuple(beta_e if m % 2 == 0 else beta_o for m in range(1, M + 1)), g)

    @classmethod
    def uniform(cls, M: int, beta: Real, g: Real) -> "BathConfig":
        """Build ``M`` baths at the same inverse temperature."""
        return cls((beta,) * M, g)

    @property
    def M(self) -> int:
        """Number of baths."""
        return len(self.beta)

    @property
    def beta_array(self) -> np.ndarray:
        """Inverse temperatures as a float array."""
        return np.array(self.beta)

    def beta_of(self, site: int) -> float:
        """Return the inverse temperature of the bath at a 1-based site."""
        return self.beta[site - 1]

    def with_beta(self, beta: RealSequence) -> "BathConfig":
        """Return a copy with other inverse temperatures."""
        return replace(self, beta=tuple(beta))

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the BathConfig class."""
        return {"beta": list(self.beta), "g": self.g}


@check_input_types
def rate(
    delta_e: Union[Real, np.ndarray], beta: Real, g: Real
) -> Union[float, np.ndarray]:
    """Return the bosonic transition rate of a jump releasing ``delta_e`` to the bath.

    For a jump ``j' -> j`` the argument is ``delta_e = E_j' - E_j``. The rate is
    ``g |w| / (1 - exp(-beta |w|))`` for ``w > 0`` and the same value times
    ``exp(beta w)`` for ``w < 0``, so that ``rate(w) / rate(-w) = exp(beta w)``.
    At ``w = 0`` the removable singularity is replaced by its limit ``g / beta``.

    Parameters
    ----------
    delta_e : Real or ~numpy.ndarray
        Energy released by the system, scalar or array.
    beta : Real
        Inverse temperature of the bath.
    g : Real
        Microscopic rate.

    Returns
    -------
    float or ~numpy.ndarray
        Positive rate(s), with the shape of ``delta_e``.
    """
    check_positive(beta, "beta")
    check_positive(g, "g")
    omega = np.asarray(delta_e, dtype=float)
    magnitude = np.abs(omega)
    with np.errstate(divide="ignore", invalid="ignore"):
        emission = np.where(
            magnitude > 0.0, g * magnitude / -np.expm1(-beta * magnitude), g / beta
        )
    values = np.where(omega < 0.0, emission * np.exp(beta * omega), emission)
    return float(values) if values.ndim == 0 else values


@check_input_types
def gibbs_populations(energies: np.ndarray, beta: Real) -> np.ndarray:
    """Return the Gibbs weights ``exp(-beta E) / Z`` of a list of energies."""
    check_positive(beta, "beta")
    weights = np.exp(-beta * (energies - energies.min()))
    return weights / weights.sum()
