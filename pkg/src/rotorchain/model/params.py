# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the parameters of the chiral clock model."""

from dataclasses import dataclass, replace
from enum import Enum, unique

from beartype import beartype as check_input_types
import numpy as np

from rotorchain.clockops.basis import ClockParams
from rotorchain.misc.checks import check_in_interval, check_is_float_int
from rotorchain.typing import Real, RealSequence


@unique
class Variant(Enum):
    """Provides an enum holding the available forms of the Hamiltonian."""

    STANDARD = "standard"
    ROTATED = "rotated"


@check_input_types
def staggered_phases(phi: Real, M: int) -> tuple:
    """Return the staggered chiral phases ``phi_j = (-1)^j phi`` for ``j = 1..M``."""
    return tuple(float((-1) ** j * phi) for j in range(1, M + 1))


@check_input_types
def homogeneous_phases(phi: Real, M: int) -> tuple:
    """Return ``M`` copies of the chiral phase ``phi``."""
    return (float(phi),) * M


@dataclass(frozen=True)
class CCMParams:
    """Parameters of a periodic chiral clock chain.

    Parameters
    ----------
    clock : ClockParams
        Chain size.
    f : float
        Control parameter in ``[0, 1]``. ``f = 1`` is the pure transverse term.
    phases : tuple
        Chiral phase of every bond, in radians. Bond ``j`` couples site ``j`` to
        site ``j + 1``, and bond ``M`` couples site ``M`` back to site 1.
    variant : Variant, default: Variant.STANDARD
        Form of the Hamiltonian.
    """

    clock: ClockParams
    f: float
    phases: tuple
    variant: Variant = Variant.STANDARD

    def __post_init__(self):
        """Validate and normalize the model parameters."""
        check_in_interval(self.f, 0.0, 1.0, "f")
        phases = tuple(self.phases)
        if len(phases) != self.clock.M:
            raise ValueError(f"Expected {self.clock.M} bond phases, got {len(phases)}.")
        for phase in phases:
            check_is_float_int(phase, "phases")
        object.__setattr__(self, "f", float(self.f))
        object.__setattr__(self, "phases", tuple(float(p) for p in phases))
        object.__setattr__(self, "variant", Variant(self.variant))

    @classmethod
    def staggered(
        cls, M: int, f: Real, phi: Real, variant: Variant = Variant.STANDARD, N_s: int = 3
    ) -> "CCMParams":
        """Build a chain with staggered phases ``(-1)^j phi``."""
        return cls(ClockParams(M, N_s), f, staggered_phases(phi, M), variant)

    @classmethod
    def homogeneous(
        cls, M: int, f: Real, phi: Real, variant: Variant = Variant.STANDARD, N_s: int = 3
    ) -> "CCMParams":
        """Build a chain with the same phase ``phi`` on every bond."""
        return cls(ClockParams(M, N_s), f, homogeneous_phases(phi, M), variant)

    @property
    def M(self) -> int:
        """Number of rotors."""
        return self.clock.M

    @property
    def N_s(self) -> int:
        """Number of clock states per rotor."""
        return self.clock.N_s

    @property
    def boundary(self) -> str:
        """Boundary condition of the chain, always periodic."""
        return "periodic"

    @property
    def phase_array(self) -> np.ndarray:
        """Bond phases as a float array."""
        return np.array(self.phases)

    def bonds(self) -> list:
        """Return the bonds as ``(site, next_site, phase)`` triples with periodic wrap."""
        return [(j, j % self.M + 1, self.phases[j - 1]) for j in range(1, self.M + 1)]

    def with_f(self, f: Real) -> "CCMParams":
        """Return a copy with another control parameter."""
        return replace(self, f=f)

    def with_phases(self, phases: RealSequence) -> "CCMParams":
        """Return a copy with other bond phases."""
        return replace(self, phases=tuple(phases))

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the CCMParams class."""
        return {
            "M": self.M,
            "N_s": self.N_s,
            "f": self.f,
            "phases": list(self.phases),
            "variant": self.variant.value,
        }
