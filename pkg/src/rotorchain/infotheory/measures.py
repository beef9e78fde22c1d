# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides entropies and bipartite correlation measures of chain states."""

from dataclasses import asdict, dataclass

from beartype import beartype as check_input_types
from beartype.typing import Iterable, Optional
import numpy as np

from rotorchain.clockops.basis import ClockParams
from rotorchain.lindblad.steady import DensityMatrix, hermitize
from rotorchain.misc.accuracy import ENTROPY_CUTOFF
from rotorchain.misc.checks import check_site, check_square


@dataclass(frozen=True)
class Partition:
    """Bipartition of the rotors into two complementary sets.

    Parameters
    ----------
    subset_a : frozenset
        1-based rotors of part ``A``.
    subset_b : frozenset
        1-based rotors of part ``B``.
    """

    subset_a: frozenset
    subset_b: frozenset

    def __post_init__(self):
        """Validate the bipartition."""
        a, b = frozenset(self.subset_a), frozenset(self.subset_b)
        if not a or not b:
            raise ValueError("Both parts of a partition must be non-empty.")
        if a & b:
            raise ValueError(f"The parts of a partition overlap on {sorted(a & b)}.")
        if a | b != frozenset(range(1, len(a | b) + 1)):
            raise ValueError("The parts of a partition must cover the rotors 1..M.")
        object.__setattr__(self, "subset_a", a)
        object.__setattr__(self, "subset_b", b)

    @classmethod
    def from_subset(cls, subset_a: Iterable[int], M: int) -> "Partition":
        """Build the partition of ``A`` and its complement in a chain of ``M`` rotors."""
        a = frozenset(subset_a)
        for site in a:
            check_site(site, M)
        return cls(a, frozenset(range(1, M + 1)) - a)

    @classmethod
    def half_chain(cls, M: int) -> "Partition":
        """Build the partition whose part ``A`` holds the first ``M // 2`` rotors."""
        return cls.from_subset(range(1, M // 2 + 1), M)

    @property
    def M(self) -> int:
        """Number of rotors."""
        return len(self.subset_a) + len(self.subset_b)


def _tensor_shape(rho: np.ndarray, clock: ClockParams) -> np.ndarray:
    check_square(rho, clock.dimension)
    return np.asarray(rho).reshape(clock.shape * 2)


def reduced_matrix(rho: np.ndarray, keep: Iterable[int], clock: ClockParams) -> np.ndarray:
    """Return the partial trace on the kept rotors as a plain array, without validation."""
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("At least one rotor must be kept.")
    for site in kept:
        check_site(site, clock.M)
    dropped = [s for s in range(1, clock.M + 1) if s not in kept]
    M = clock.M
    order = [s - 1 for s in kept] + [s - 1 for s in dropped]
    tensor = _tensor_shape(rho, clock).transpose(order + [M + axis for axis in order])
    d_keep = clock.N_s ** len(kept)
    d_drop = clock.N_s ** len(dropped)
    tensor = tensor.reshape(d_keep, d_drop, d_keep, d_drop)
    return np.einsum("ijkj->ik", tensor)


@check_input_types
def partial_trace(rho: np.ndarray, keep: Iterable[int], clock: ClockParams) -> DensityMatrix:
    """Trace out every rotor not in ``keep``.

    Parameters
    ----------
    rho : ~numpy.ndarray
        Density matrix of the chain.
    keep : Iterable[int]
        1-based rotors kept, in increasing order in the result.
    clock : ClockParams
        Chain size.

    Returns
    -------
    DensityMatrix
        Reduced state.
    """
    return DensityMatrix(hermitize(reduced_matrix(rho, keep, clock)))


@check_input_types
def partial_transpose(rho: np.ndarray, sites: Iterable[int], clock: ClockParams) -> np.ndarray:
    """Transpose the indices of the given rotors.

    The result is Hermitian but in general not positive.
    """
    M = clock.M
    axes = list(range(2 * M))
    for site in set(sites):
        check_site(site, M)
        axes[site - 1], axes[M + site - 1] = axes[M + site - 1], axes[site - 1]
    return _tensor_shape(rho, clock).transpose(axes).reshape(clock.dimension, clock.dimension)


def shannon_entropy(probabilities: np.ndarray) -> float:
    """Return ``-sum p log p`` with values below ``ENTROPY_CUTOFF`` treated as zero."""
    p = np.asarray(probabilities, dtype=float)
    p = p[p > ENTROPY_CUTOFF]
    return float(-np.sum(p * np.log(p)))


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Return ``-Tr(rho log rho)`` in natural units."""
    return shannon_entropy(np.linalg.eigvalsh(hermitize(rho)))


def relative_entropy(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Return ``S(rho || sigma) = Tr(rho log rho) - Tr(rho log sigma)``.

    Returns ``inf`` when the support of ``rho`` is not contained in the support of ``sigma``.
    """
    weights, vectors = np.linalg.eigh(hermitize(sigma))
    overlaps = np.real(np.einsum("ia,ij,ja->a", vectors.conj(), np.asarray(rho), vectors))
    outside = weights <= ENTROPY_CUTOFF
    if np.any(overlaps[outside] > ENTROPY_CUTOFF):
        return float("inf")
    cross = float(np.sum(overlaps[~outside] * np.log(weights[~outside])))
    return -von_neumann_entropy(rho) - cross


@check_input_types
def negativity(rho: np.ndarray, partition: Partition, clock: ClockParams) -> float:
    """Return the sum of the moduli of the negative eigenvalues of ``rho^{T_A}``."""
    eigenvalues = np.linalg.eigvalsh(hermitize(partial_transpose(rho, partition.subset_a, clock)))
    return float(-eigenvalues[eigenvalues < 0].sum())


@check_input_types
def mutual_information(rho: np.ndarray, partition: Partition, clock: ClockParams) -> float:
    """Return ``I(A:B) = S_A + S_B - S_AB``."""
    s_a = von_neumann_entropy(reduced_matrix(rho, partition.subset_a, clock))
    s_b = von_neumann_entropy(reduced_matrix(rho, partition.subset_b, clock))
    return s_a + s_b - von_neumann_entropy(rho)


def l1_coherence(rho: np.ndarray) -> float:
    """Return the sum of the moduli of the off-diagonal entries in the clock basis."""
    magnitudes = np.abs(np.asarray(rho))
    return float(magnitudes.sum() - np.trace(magnitudes))


@dataclass(frozen=True)
class InformationRecord:
    """Bipartite measures of one state.

    Parameters
    ----------
    S_A : float
        Entropy of the reduced state on ``A``.
    I_AB : float
        Mutual information between ``A`` and ``B``.
    C : float
        L1 coherence in the clock basis.
    N_A : float
        Negativity with respect to ``A``.
    """

    S_A: float
    I_AB: float
    C: float
    N_A: float

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the InformationRecord class."""
        return asdict(self)


@check_input_types
def information_measures(
    rho: np.ndarray, clock: ClockParams, partition: Optional[Partition] = None
) -> InformationRecord:
    """Evaluate entropy, mutual information, coherence and negativity of a state.

    Parameters
    ----------
    rho : ~numpy.ndarray
        Density matrix of the chain.
    clock : ClockParams
        Chain size.
    partition : Partition, default: None
        Bipartition. The half-chain split is used when ``None``.
    """
    partition = partition or Partition.half_chain(clock.M)
    return InformationRecord(
        S_A=von_neumann_entropy(reduced_matrix(rho, partition.subset_a, clock)),
        I_AB=mutual_information(rho, partition, clock),
        C=l1_coherence(rho),
        N_A=negativity(rho, partition, clock),
    )
