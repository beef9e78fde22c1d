# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the global quantum discord minimized over local measurement bases.

The local basis of every qutrit is ``R_i |k>`` with ``R_i = exp(i theta_i . Lambda)``
and ``Lambda`` the eight Gell-Mann matrices. Dephasing in an orthonormal basis
turns the relative entropies of the discord into entropy differences:
``S(rho || Pi(rho)) = H(diag(R^† rho R)) - S(rho)``.
"""

from dataclasses import dataclass
from functools import reduce

from beartype import beartype as check_input_types
from beartype.typing import Optional
import numpy as np
from scipy.optimize import minimize

from rotorchain.clockops.basis import ClockParams
from rotorchain.errors import SolverConvergenceError
from rotorchain.infotheory.measures import reduced_matrix, shannon_entropy, von_neumann_entropy
from rotorchain.lindblad.steady import DensityMatrix
from rotorchain.logger import LOG
from rotorchain.misc.options import AnnealConfig

N_GENERATORS = 8
"""Number of rotation generators of a qutrit."""


def gellmann_generators() -> np.ndarray:
    """Return the eight Gell-Mann matrices, normalized to ``Tr(L_a L_b) = 2 delta_ab``.

    Returns
    -------
    ~numpy.ndarray
        Complex array of shape ``(8, 3, 3)``.
    """
    generators = np.zeros((N_GENERATORS, 3, 3), dtype=np.complex128)
    generators[0][0, 1] = generators[0][1, 0] = 1.0
    generators[1][0, 1], generators[1][1, 0] = -1j, 1j
    generators[2][0, 0], generators[2][1, 1] = 1.0, -1.0
    generators[3][0, 2] = generators[3][2, 0] = 1.0
    generators[4][0, 2], generators[4][2, 0] = -1j, 1j
    generators[5][1, 2] = generators[5][2, 1] = 1.0
    generators[6][1, 2], generators[6][2, 1] = -1j, 1j
    generators[7] = np.diag([1.0, 1.0, -2.0]) / np.sqrt(3.0)
    generators.setflags(write=False)
    return generators


_GENERATORS = gellmann_generators()


def local_rotation(theta: np.ndarray) -> np.ndarray:
    """Return ``exp(i theta . Lambda)`` for eight angles."""
    generator = np.tensordot(theta, _GENERATORS, axes=1)
    weights, vectors = np.linalg.eigh(generator)
    return (vectors * np.exp(1j * weights)) @ vectors.conj().T


def _check_angles(angles: np.ndarray, clock: ClockParams) -> np.ndarray:
    if clock.N_s != 3:
        raise ValueError(f"Local rotations are defined for qutrits only, got N_s={clock.N_s}.")
    angles = np.asarray(angles, dtype=float)
    if angles.shape != (clock.M, N_GENERATORS):
        raise ValueError(
            f"Expected angles of shape {(clock.M, N_GENERATORS)}, got {angles.shape}."
        )
    return angles


def rotated_basis(angles: np.ndarray, clock: ClockParams) -> np.ndarray:
    """Return the product rotation ``R_1 ⊗ ... ⊗ R_M`` whose columns are the measured basis."""
    angles = _check_angles(angles, clock)
    return reduce(np.kron, [local_rotation(theta) for theta in angles])


@check_input_types
def dephase(rho: np.ndarray, angles: np.ndarray, clock: ClockParams) -> DensityMatrix:
    """Remove the coherences of ``rho`` in the rotated product basis.

    ``Pi(rho) = sum_j Pi_j rho Pi_j`` with ``Pi_j = R |j><j| R^†``.

    Parameters
    ----------
    rho : ~numpy.ndarray
        Density matrix of the chain.
    angles : ~numpy.ndarray
        Rotation angles of shape ``(M, 8)``.
    clock : ClockParams
        Chain of qutrits.
    """
    rotation = rotated_basis(angles, clock)
    populations = np.real(np.einsum("ia,ij,ja->a", rotation.conj(), np.asarray(rho), rotation))
    return DensityMatrix((rotation * populations) @ rotation.conj().T)


class DiscordObjective:
    """Objective ``S(rho || Pi(rho)) - sum_i S(rho_i || Pi_i(rho_i))`` over the angles.

    Entropies that do not depend on the angles are computed once. The local term of
    a rotor depends only on its own angles, so a proposal on one rotor recomputes
    one local term.
    """

    def __init__(self, rho: np.ndarray, clock: ClockParams):
        """Initialize the ``DiscordObjective`` class."""
        if clock.N_s != 3:
            raise ValueError(f"The discord is defined for qutrits only, got N_s={clock.N_s}.")
        self._rho = np.asarray(rho, dtype=np.complex128)
        self._clock = clock
        self._marginals = [
            reduced_matrix(self._rho, [site], clock) for site in range(1, clock.M + 1)
        ]
        self._marginal_entropies = [von_neumann_entropy(m) for m in self._marginals]
        self._entropy = von_neumann_entropy(self._rho)
        self.evaluations = 0

    @property
    def clock(self) -> ClockParams:
        """Chain size."""
        return self._clock

    @staticmethod
    def _dephased_entropy(rho: np.ndarray, rotation: np.ndarray) -> float:
        populations = np.real(np.einsum("ia,ij,ja->a", rotation.conj(), rho, rotation))
        return shannon_entropy(populations)

    def local_term(self, site: int, rotation: np.ndarray) -> float:
        """Return ``S(rho_i || Pi_i(rho_i))`` of one rotor for its local rotation."""
        marginal = self._marginals[site - 1]
        return self._dephased_entropy(marginal, rotation) - self._marginal_entropies[site - 1]

    def evaluate(self, rotations: list, local_terms: list) -> float:
        """Return the objective for given local rotations and their local terms."""
        self.evaluations += 1
        rotation = reduce(np.kron, rotations)
        global_term = self._dephased_entropy(self._rho, rotation) - self._entropy
        return global_term - float(np.sum(local_terms))

    def __call__(self, angles: np.ndarray) -> float:
        """Return the objective at an ``(M, 8)`` (or flattened) angle array."""
        angles = np.reshape(angles, (self._clock.M, N_GENERATORS))
        rotations = [local_rotation(theta) for theta in angles]
        local_terms = [self.local_term(i + 1, r) for i, r in enumerate(rotations)]
        return self.evaluate(rotations, local_terms)


@dataclass(frozen=True)
class DiscordResult:
    """Outcome of a global discord minimization.

    Parameters
    ----------
    value : float
        Smallest objective found over all restarts.
    angles : ~numpy.ndarray
        Minimizing angles, shape ``(M, 8)``.
    restart_values : tuple
        Best objective of every restart.
    converged : bool
        Whether the local polish of at least one restart converged.
    """

    value: float
    angles: np.ndarray
    restart_values: tuple
    converged: bool

    def to_dict(self) -> dict:
        """Provide the dictionary representation of the DiscordResult class."""
        return {
            "value": self.value,
            "angles": self.angles.tolist(),
            "restart_values": list(self.restart_values),
            "converged": self.converged,
        }


def _anneal(objective: DiscordObjective, config: AnnealConfig, rng: np.random.Generator):
    """Run one Metropolis walk with geometric cooling and return its best point."""
    M = objective.clock.M
    angles = rng.uniform(-np.pi, np.pi, size=(M, N_GENERATORS))
    rotations = [local_rotation(theta) for theta in angles]
    local_terms = [objective.local_term(i + 1, r) for i, r in enumerate(rotations)]
    current = objective.evaluate(rotations, local_terms)
    best_value, best_angles = current, angles.copy()

    temperature = config.initial_temperature
    while temperature > config.min_temperature:
        for _ in range(config.steps_per_temperature):
            site = int(rng.integers(M))
            theta = angles[site] + rng.normal(0.0, config.proposal_width, N_GENERATORS)
            rotation = local_rotation(theta)
            trial_rotations = rotations.copy()
            trial_rotations[site] = rotation
            trial_terms = local_terms.copy()
            trial_terms[site] = objective.local_term(site + 1, rotation)
            value = objective.evaluate(trial_rotations, trial_terms)
            delta = value - current
            if delta <= 0.0 or rng.random() < np.exp(-delta / temperature):
                angles[site] = theta
                rotations, local_terms, current = trial_rotations, trial_terms, value
                if current < best_value:
                    best_value, best_angles = current, angles.copy()
        temperature *= config.cooling_factor
    return best_value, best_angles


def _polish(objective: DiscordObjective, value: float, angles: np.ndarray, config: AnnealConfig):
    """Refine an annealed point with a simplex search."""
    n = angles.size
    result = minimize(
        objective,
        angles.ravel(),
        method="Nelder-Mead",
        options={
            "xatol": config.tolerance,
            "fatol": config.tolerance,
            "maxiter": 400 * n,
            "adaptive": True,
        },
    )
    converged = bool(result.success) or abs(value - result.fun) <= config.tolerance
    if result.fun < value:
        return float(result.fun), result.x.reshape(angles.shape), converged
    return value, angles, converged


@check_input_types
def global_discord(
    rho: np.ndarray, clock: ClockParams, config: Optional[AnnealConfig] = None
) -> DiscordResult:
    """Minimize the global discord objective over local Gell-Mann rotations.

    Each restart runs simulated annealing with Gaussian proposals on the angles of
    one rotor at a time, then a local simplex polish. Restart seeds are spawned
    from ``config.seed``, so results are reproducible bit for bit.

    Parameters
    ----------
    rho : ~numpy.ndarray
        Density matrix of a chain of qutrits.
    clock : ClockParams
        Chain size, with ``N_s = 3``.
    config : AnnealConfig, default: None
        Annealing settings. ``None`` uses the defaults.

    Returns
    -------
    DiscordResult
        Minimum over restarts with its angles.

    Raises
    ------
    SolverConvergenceError
        If the polish of every restart failed to converge. The best result is
        attached as ``best``.
    """
    config = config or AnnealConfig()
    objective = DiscordObjective(rho, clock)
    seeds = np.random.SeedSequence(config.seed).spawn(config.restarts)

    values, angle_sets, flags = [], [], []
    for index, seed in enumerate(seeds):
        value, angles = _anneal(objective, config, np.random.default_rng(seed))
        converged = True
        if config.polish:
            value, angles, converged = _polish(objective, value, angles, config)
        LOG.debug(f"Discord restart {index}: {value:.6e} (converged={converged})")
        values.append(value)
        angle_sets.append(angles)
        flags.append(converged)

    best = int(np.argmin(values))
    result = DiscordResult(
        value=float(values[best]),
        angles=angle_sets[best],
        restart_values=tuple(float(v) for v in values),
        converged=any(flags),
    )
    LOG.debug(f"Global discord {result.value:.6e} after {objective.evaluations} evaluations")
    if not result.converged:
        raise SolverConvergenceError(
            f"No discord restart converged within tolerance {config.tolerance}.", best=result
        )
    return result
