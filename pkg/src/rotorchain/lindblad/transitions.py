# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the single-rotor jumps induced by the baths."""

from dataclasses import dataclass

from beartype import beartype as check_input_types
from beartype.typing import Iterator
import numpy as np
import scipy.sparse as sp

from rotorchain.clockops.basis import ClockParams
from rotorchain.lindblad.baths import BathConfig, rate
from rotorchain.logger import LOG
from rotorchain.model.hamiltonian import HamiltonianSplit, diagonal_energies


@dataclass(frozen=True)
class Transition:
    """One jump ``source -> target`` of a single rotor.

    Parameters
    ----------
    site : int
        1-based rotor moved by the jump.
    source : int
        Flat index of the initial basis state ``j'``.
    target : int
        Flat index of the final basis state ``j``.
    rate : float
        Rate ``W_{j,j'}`` of the jump.
    """

    site: int
    source: int
    target: int
    rate: float


class TransitionSet:
    """Array-backed collection of transitions.

    Iterating yields :class:`Transition` objects. The arrays are read-only and are
    what the Liouvillian assembly consumes.

    Parameters
    ----------
    sites, sources, targets : ~numpy.ndarray
        Integer arrays of equal length.
    rates : ~numpy.ndarray
        Non-negative float array of the same length.
    clock : ClockParams
        Chain the indices refer to.
    """

    def __init__(
        self,
        sites: np.ndarray,
        sources: np.ndarray,
        targets: np.ndarray,
        rates: np.ndarray,
        clock: ClockParams,
    ):
        """Initialize the ``TransitionSet`` class."""
        arrays = [np.asarray(a) for a in (sites, sources, targets)]
        rates = np.asarray(rates, dtype=float)
        if any(a.shape != rates.shape for a in arrays):
            raise ValueError("Transition arrays must share one length.")
        if np.any(rates < 0):
            raise ValueError("Transition rates must be non-negative.")
        for array in (*arrays, rates):
            array.setflags(write=False)
        self._sites, self._sources, self._targets = arrays
        self._rates = rates
        self._clock = clock

    @property
    def sites(self) -> np.ndarray:
        """1-based rotor of every transition."""
        return self._sites

    @property
    def sources(self) -> np.ndarray:
        """Initial state of every transition."""
        return self._sources

    @property
    def targets(self) -> np.ndarray:
        """Final state of every transition."""
        return self._targets

    @property
    def rates(self) -> np.ndarray:
        """Rate of every transition."""
        return self._rates

    @property
    def clock(self) -> ClockParams:
        """Chain the indices refer to."""
        return self._clock

    @property
    def dimension(self) -> int:
        """Hilbert dimension."""
        return self._clock.dimension

    def for_site(self, site: int) -> "TransitionSet":
        """Return the transitions of one rotor."""
        mask = self._sites == site
        return TransitionSet(
            self._sites[mask],
            self._sources[mask],
            self._targets[mask],
            self._rates[mask],
            self._clock,
        )

    def scaled(self, factor: float) -> "TransitionSet":
        """Return the same transitions with every rate multiplied by ``factor``."""
        return TransitionSet(
            self._sites, self._sources, self._targets, self._rates * factor, self._clock
        )

    def site_list(self) -> list:
        """Return the sorted distinct sites present."""
        return sorted(int(s) for s in np.unique(self._sites))

    def __len__(self) -> int:
        """Number of transitions."""
        return int(self._rates.size)

    def __iter__(self) -> Iterator[Transition]:
        """Iterate over the transitions as :class:`Transition` objects."""
        for site, source, target, value in zip(
            self._sites, self._sources, self._targets, self._rates
        ):
            yield Transition(int(site), int(source), int(target), float(value))

    def __repr__(self) -> str:
        """Representation of the ``TransitionSet`` class."""
        return f"TransitionSet(size={len(self)}, clock={self._clock})"


@check_input_types
def enumerate_transitions(split: HamiltonianSplit, baths: BathConfig) -> TransitionSet:
    """Enumerate every single-rotor jump ``|..k_m..> -> |..k_m ± 1..>``.

    Each basis state, each rotor and each direction contributes one transition,
    ``2 M D`` in total. The rate of a jump ``j' -> j`` at rotor ``m`` is
    ``rate(E_j' - E_j, beta_m, g)`` with the diagonal energies of ``split``.

    Parameters
    ----------
    split : HamiltonianSplit
        Hamiltonian whose diagonal energies set the jump energies.
    baths : BathConfig
        One bath per rotor.

    Returns
    -------
    TransitionSet
        All transitions, grouped by site and then by direction.
    """
    params = split.params
    if baths.M != params.M:
        raise ValueError(f"Expected {params.M} baths, got {baths.M}.")
    clock = params.clock
    energies = diagonal_energies(split)
    states = np.arange(clock.dimension)

    sites, sources, targets, rates = [], [], [], []
    for site in range(1, params.M + 1):
        for step in (1, -1):
            reached = clock.shifted(site, step)
            sites.append(np.full(clock.dimension, site))
            sources.append(states)
            targets.append(reached)
            rates.append(rate(energies[states] - energies[reached], baths.beta_of(site), baths.g))

    transitions = TransitionSet(
        np.concatenate(sites),
        np.concatenate(sources),
        np.concatenate(targets),
        np.concatenate(rates),
        clock,
    )
    LOG.debug(f"Enumerated {len(transitions)} transitions on dimension {clock.dimension}")
    return transitions


@check_input_types
def classical_generator(transitions: TransitionSet) -> sp.csr_matrix:
    """Return the classical rate matrix ``W`` with ``dp/dt = W p``.

    Off-diagonal entries ``W[j, j']`` hold the summed rates of the jumps
    ``j' -> j``. The diagonal holds minus the escape rates, so every column sums
    to zero.
    """
    D = transitions.dimension
    jumps = sp.coo_matrix(
        (transitions.rates, (transitions.targets, transitions.sources)), shape=(D, D)
    ).tocsr()
    escape = np.bincount(transitions.sources, weights=transitions.rates, minlength=D)
    return (jumps - sp.diags(escape)).tocsr()
