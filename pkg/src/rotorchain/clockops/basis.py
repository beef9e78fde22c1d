# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the product clock basis of a rotor chain."""

from functools import cached_property

from beartype import beartype as check_input_types
from beartype.typing import Sequence, Union
import numpy as np

from rotorchain.misc.checks import check_site
from rotorchain.misc.defaults import DEFAULT_N_STATES

MAX_DIMENSION = np.iinfo(np.int64).max
"""Largest Hilbert dimension addressable by the flat index."""


class ClockParams:
    """Size of a chain of clock rotors.

    Parameters
    ----------
    M : int
        Number of rotors, at least 2.
    N_s : int, default: 3
        Number of clock states per rotor, at least 2.

    Notes
    -----
    Basis states are encoded positionally with site 1 as the most significant
    base-``N_s`` digit. Every module of the package uses this convention.
    """

    @check_input_types
    def __init__(self, M: int, N_s: int = DEFAULT_N_STATES):
        """Initialize the ``ClockParams`` class."""
        if N_s < 2:
            raise ValueError(f"A rotor needs at least 2 clock states, got N_s={N_s}.")
        if M < 2:
            raise ValueError(f"A chain needs at least 2 rotors, got M={M}.")
        if M * np.log(N_s) >= np.log(MAX_DIMENSION):
            raise ValueError(f"The Hilbert dimension {N_s}^{M} is not addressable.")
        self._M = M
        self._N_s = N_s

    @property
    def M(self) -> int:
        """Number of rotors."""
        return self._M

    @property
    def N_s(self) -> int:
        """Number of clock states per rotor."""
        return self._N_s

    @property
    def dimension(self) -> int:
        """Hilbert dimension ``N_s**M``."""
        return self._N_s**self._M

    @property
    def shape(self) -> tuple:
        """Tensor shape ``(N_s,) * M`` of a state vector."""
        return (self._N_s,) * self._M

    @cached_property
    def digits(self) -> np.ndarray:
        """Digit table of shape ``(D, M)``: row ``i`` holds the digits of basis state ``i``."""
        table = np.array(np.unravel_index(np.arange(self.dimension), self.shape)).T
        table.setflags(write=False)
        return table

    def index(self, digits: Sequence[int]) -> int:
        """Return the flat index of a digit sequence (digits taken mod ``N_s``)."""
        if len(digits) != self._M:
            raise ValueError(f"Expected {self._M} digits, got {len(digits)}.")
        return int(np.ravel_multi_index(np.mod(digits, self._N_s), self.shape))

    def state(self, index: int) -> "BasisState":
        """Return the basis state with the given flat index."""
        return BasisState(self.digits[index], self)

    def shifted(self, site: int, step: int) -> np.ndarray:
        """Return, for every basis state, the index reached by moving ``site`` by ``step``.

        Parameters
        ----------
        site : int
            1-based rotor index.
        step : int
            Clock increment, applied mod ``N_s``.

        Returns
        -------
        ~numpy.ndarray
            Integer array of length ``D``.
        """
        check_site(site, self._M)
        stride = self._N_s ** (self._M - site)
        digit = self.digits[:, site - 1]
        new_digit = np.mod(digit + step, self._N_s)
        return np.arange(self.dimension) + (new_digit - digit) * stride

    def __eq__(self, other: object) -> bool:
        """Equals operator for the ``ClockParams`` class."""
        return isinstance(other, ClockParams) and (self.M, self.N_s) == (other.M, other.N_s)

    def __hash__(self) -> int:
        """Hash consistent with equality."""
        return hash((self._M, self._N_s))

    def __repr__(self) -> str:
        """Representation of the ``ClockParams`` class."""
        return f"ClockParams(M={self._M}, N_s={self._N_s})"


class BasisState:
    """Product clock state ``|k_1, ..., k_M>`` of a rotor chain.

    Parameters
    ----------
    digits : Sequence[int]
        Clock index of every rotor; reduced mod ``N_s``.
    params : ClockParams
        Chain size.
    """

    def __init__(self, digits: Union[Sequence[int], np.ndarray], params: ClockParams):
        """Initialize the ``BasisState`` class."""
        if len(digits) != params.M:
            raise ValueError(f"Expected {params.M} digits, got {len(digits)}.")
        self._digits = tuple(int(d) % params.N_s for d in digits)
        self._params = params

    @classmethod
    def from_index(cls, index: int, params: ClockParams) -> "BasisState":
        """Build the basis state with a given flat index."""
        if not 0 <= index < params.dimension:
            raise ValueError(f"Index {index} is outside [0, {params.dimension - 1}].")
        return cls(np.unravel_index(index, params.shape), params)

    @property
    def digits(self) -> tuple:
        """Clock index of every rotor."""
        return self._digits

    @property
    def index(self) -> int:
        """Flat index of the state."""
        return self._params.index(self._digits)

    def rotated(self, site: int, step: int) -> "BasisState":
        """Return the state with rotor ``site`` moved by ``step`` clock positions."""
        check_site(site, self._params.M)
        digits = list(self._digits)
        digits[site - 1] += step
        return BasisState(digits, self._params)

    def __eq__(self, other: object) -> bool:
        """Equals operator for the ``BasisState`` class."""
        return (
            isinstance(other, BasisState)
            and self._digits == other._digits
            and self._params == other._params
        )

    def __hash__(self) -> int:
        """Hash consistent with equality."""
        return hash((self._digits, self._params))

    def __repr__(self) -> str:
        """Representation of the ``BasisState`` class."""
        return "|" + "".join(str(d) for d in self._digits) + ">"
