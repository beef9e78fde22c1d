# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the steady-state and time-evolution solvers of the master equation."""

from dataclasses import dataclass

from beartype import beartype as check_input_types
from beartype.typing import Optional, Union
import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply, splu

from rotorchain.errors import (
    DegenerateSteadyStateError,
    PropagationInstabilityError,
    SolverConvergenceError,
    protect_linalg,
)
from rotorchain.lindblad.baths import BathConfig
from rotorchain.lindblad.liouvillian import (
    Liouvillian,
    build_liouvillian,
    unvectorize,
    vectorize,
)
from rotorchain.lindblad.transitions import TransitionSet, enumerate_transitions
from rotorchain.logger import LOG
from rotorchain.misc.accuracy import POSITIVITY_ACCURACY, TRACE_ACCURACY
from rotorchain.misc.checks import check_density_matrix, check_positive
from rotorchain.misc.options import SolverOptions
from rotorchain.model.hamiltonian import HamiltonianSplit, build_hamiltonian
from rotorchain.model.params import CCMParams
from rotorchain.typing import Real

PROPAGATION_DRIFT = 1e-8
"""Largest trace or Hermiticity drift tolerated along a propagation."""

STABILITY_FACTOR = 0.1
"""Time steps above ``STABILITY_FACTOR / ||L||_inf`` trigger a stability warning."""


class DensityMatrix(np.ndarray):
    """Provides a density-matrix representation.

    The input is validated on construction: it must be square, Hermitian and of
    unit trace within ``trace_tolerance``, with no eigenvalue below
    ``-positivity_tolerance``. The stored array is read-only.

    Parameters
    ----------
    input : ~numpy.ndarray
        ``D x D`` complex matrix.
    trace_tolerance : Real, default: TRACE_ACCURACY
        Tolerance for the trace and Hermiticity checks.
    positivity_tolerance : Real, default: POSITIVITY_ACCURACY
        Tolerance for the spectral check. ``None`` skips it.
    """

    def __new__(
        cls,
        input: np.ndarray,
        trace_tolerance: Real = TRACE_ACCURACY,
        positivity_tolerance: Optional[Real] = POSITIVITY_ACCURACY,
    ):
        """Initialize the ``DensityMatrix`` class."""
        obj = np.array(input, dtype=np.complex128).view(cls)
        check_density_matrix(obj, trace_tolerance, positivity_tolerance)
        obj.setflags(write=False)
        return obj

    @classmethod
    def from_pure(cls, psi: np.ndarray) -> "DensityMatrix":
        """Build the projector ``|psi><psi|`` of a normalized state vector."""
        psi = np.asarray(psi, dtype=np.complex128).ravel()
        return cls(np.outer(psi, psi.conj()))

    @classmethod
    def maximally_mixed(cls, dimension: int) -> "DensityMatrix":
        """Build ``1 / D``."""
        return cls(np.eye(dimension) / dimension)

    @property
    def dimension(self) -> int:
        """Hilbert dimension."""
        return self.shape[0]

    @property
    def populations(self) -> np.ndarray:
        """Real diagonal of the matrix."""
        return np.asarray(np.diagonal(self).real)

    def purity(self) -> float:
        """Return ``Tr(rho^2)``."""
        return float(np.real(np.vdot(self, self)))


def hermitize(matrix: np.ndarray) -> np.ndarray:
    """Return the Hermitian part ``(A + A^†) / 2`` as a plain array."""
    matrix = np.asarray(matrix)
    return 0.5 * (matrix + matrix.conj().T)


@check_input_types
def trace_distance(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Return the trace distance ``||rho - sigma||_1 / 2``."""
    eigenvalues = np.linalg.eigvalsh(hermitize(np.asarray(rho) - np.asarray(sigma)))
    return float(0.5 * np.abs(eigenvalues).sum())


@dataclass(frozen=True)
class SteadyStateResult:
    """Steady state together with the diagnostics of the solve.

    Parameters
    ----------
    rho : DensityMatrix
        Steady state.
    residual : float
        Relative residual ``||L vec(rho)|| / ||L||_F``.
    method : str
        Path that produced the state: ``"dense"``, ``"sparse"`` or ``"propagate"``.
    """

    rho: DensityMatrix
    residual: float
    method: str


def _relative_residual(L: Liouvillian, vector: np.ndarray) -> float:
    scale = L.norm()
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(L.matrix @ vector) / scale)


def _normalize(L: Liouvillian, vector: np.ndarray) -> np.ndarray:
    rho = unvectorize(vector, L.dimension)
    trace = np.trace(rho)
    if abs(trace) == 0.0:
        raise SolverConvergenceError("The null vector has zero trace and is not a state.")
    return hermitize(rho / trace)


def _solve_dense(L: Liouvillian, options: SolverOptions) -> np.ndarray:
    """Take the steady state from the null space of the dense superoperator."""
    kernel = scipy.linalg.null_space(L.matrix.toarray(), rcond=options.residual)
    if kernel.shape[1] > 1:
        raise DegenerateSteadyStateError(kernel.shape[1])
    if kernel.shape[1] == 0:
        # The numerical kernel sits just above the cutoff: take the weakest singular vector.
        _, _, vh = np.linalg.svd(L.matrix.toarray())
        return vh[-1].conj()
    return kernel[:, 0]


def _solve_sparse(L: Liouvillian, options: SolverOptions) -> np.ndarray:
    """Solve ``L x = 0`` with the first equation replaced by ``Tr(rho) = 1``."""
    size, D = L.size, L.dimension
    keep = np.ones(size)
    keep[0] = 0.0
    trace_row = sp.csr_matrix(
        (np.ones(D), (np.zeros(D, dtype=int), np.arange(D) * (D + 1))), shape=(size, size)
    )
    system = (sp.diags(keep) @ L.matrix + trace_row).tocsc()
    rhs = np.zeros(size, dtype=np.complex128)
    rhs[0] = 1.0
    try:
        factor = splu(system, permc_spec=options.permc_spec)
    except RuntimeError as error:
        # SuperLU reports an exactly singular factor when the kernel is not one-dimensional.
        LOG.debug(f"Sparse factorization failed: {error}")
        raise DegenerateSteadyStateError() from error
    solution = factor.solve(rhs)
    for _ in range(options.refinement_steps):
        solution = solution + factor.solve(rhs - system @ solution)
    return solution


def _solve_propagate(L: Liouvillian, options: SolverOptions) -> np.ndarray:
    """Evolve the maximally mixed state over the propagation horizon."""
    start = vectorize(np.eye(L.dimension, dtype=np.complex128) / L.dimension)
    return expm_multiply(L.matrix * options.propagation_horizon, start)


_SOLVERS = {"dense": _solve_dense, "sparse": _solve_sparse, "propagate": _solve_propagate}


def _select_method(L: Liouvillian, options: SolverOptions) -> str:
    if options.method != "auto":
        return options.method
    if L.size <= options.dense_superoperator_limit:
        return "dense"
    if L.size <= options.sparse_superoperator_limit:
        return "sparse"
    return "propagate"


@protect_linalg
def solve_steady_state(
    L: Liouvillian, options: Optional[SolverOptions] = None
) -> SteadyStateResult:
    """Solve ``L(rho) = 0`` for the unique steady state.

    Small generators use the dense null space. Larger ones use a sparse direct
    solve in which one row of ``L`` is replaced by the trace condition, followed
    by iterative refinement. If that path fails its residual check, the state is
    obtained by long-time propagation instead.

    Parameters
    ----------
    L : Liouvillian
        Trace-preserving generator.
    options : SolverOptions, default: None
        Solver settings. ``None`` uses the defaults.

    Returns
    -------
    SteadyStateResult
        Steady state, relative residual and solver path.

    Raises
    ------
    DegenerateSteadyStateError
        If the kernel of ``L`` is not one-dimensional.
    SolverConvergenceError
        If no path reaches the residual tolerance or the result is not a state.
    """
    options = options or SolverOptions()
    tolerance = options.residual
    if L.size > options.stretch_size:
        tolerance = options.stretch_residual
        LOG.warning(
            f"Superoperator size {L.size} exceeds {options.stretch_size}: "
            f"accepting a relative residual up to {tolerance:.1e}"
        )

    method = _select_method(L, options)
    LOG.debug(f"Steady state of {L!r} through the {method} path")
    rho = _normalize(L, _SOLVERS[method](L, options))
    residual = _relative_residual(L, vectorize(rho))

    if residual > tolerance and method == "sparse" and options.method == "auto":
        LOG.warning(
            f"Sparse steady state residual {residual:.2e} above {tolerance:.1e}, "
            "falling back to propagation"
        )
        method = "propagate"
        rho = _normalize(L, _solve_propagate(L, options))
        residual = _relative_residual(L, vectorize(rho))

    if residual > tolerance:
        raise SolverConvergenceError(
            f"Steady state residual {residual:.2e} exceeds {tolerance:.1e} ({method} path).",
            best=rho,
        )
    try:
        state = DensityMatrix(rho)
    except ValueError as error:
        raise SolverConvergenceError(f"The steady state is not a valid state: {error}") from error
    return SteadyStateResult(rho=state, residual=residual, method=method)


@check_input_types
def steady_state(L: Liouvillian, options: Optional[SolverOptions] = None) -> DensityMatrix:
    """Return the steady state of ``L``. See :func:`solve_steady_state`."""
    return solve_steady_state(L, options).rho


@check_input_types
def propagate(
    rho0: np.ndarray,
    L: Liouvillian,
    t: Real,
    dt: Real,
    check_interval: int = 100,
) -> DensityMatrix:
    """Integrate ``d rho / dt = L(rho)`` with the classical fourth-order Runge-Kutta scheme.

    The step is shrunk so that an integer number of steps ends exactly at ``t``.
    Steps above ``0.1 / ||L||_inf`` are outside the stability region of the
    scheme for the fastest modes and are reported with a warning.

    Parameters
    ----------
    rho0 : ~numpy.ndarray
        Initial density matrix.
    L : Liouvillian
        Generator.
    t : Real
        Final time, non-negative.
    dt : Real
        Largest time step.
    check_interval : int, default: 100
        Steps between two drift checks.

    Returns
    -------
    DensityMatrix
        State at time ``t``.

    Raises
    ------
    PropagationInstabilityError
        If the trace or the Hermiticity drifts by more than ``PROPAGATION_DRIFT``
        or the state stops being finite.
    """
    check_positive(dt, "dt")
    if t < 0:
        raise ValueError(f"The final time must be non-negative, got {t}.")
    if np.shape(rho0) != (L.dimension, L.dimension):
        raise ValueError(f"Expected a {L.dimension}x{L.dimension} initial state.")
    scale = L.infinity_norm()
    if scale > 0 and dt > STABILITY_FACTOR / scale:
        LOG.warning(
            f"Time step {dt} exceeds {STABILITY_FACTOR}/||L||_inf = {STABILITY_FACTOR / scale:.3e}"
        )

    steps = int(np.ceil(t / dt)) if t > 0 else 0
    h = t / steps if steps else 0.0
    generator = L.matrix
    vector = vectorize(np.asarray(rho0, dtype=np.complex128)).copy()
    initial_trace = np.trace(np.asarray(rho0))

    def check_drift(step: int):
        rho = unvectorize(vector, L.dimension)
        if not np.all(np.isfinite(vector)):
            raise PropagationInstabilityError(f"The state became non-finite at step {step}.")
        trace_drift = abs(np.trace(rho) - initial_trace)
        hermiticity_drift = np.abs(rho - rho.conj().T).max()
        if trace_drift > PROPAGATION_DRIFT or hermiticity_drift > PROPAGATION_DRIFT:
            raise PropagationInstabilityError(
                f"Drift at step {step}: trace {trace_drift:.2e}, "
                f"Hermiticity {hermiticity_drift:.2e}."
            )

    for step in range(1, steps + 1):
        k1 = generator @ vector
        k2 = generator @ (vector + 0.5 * h * k1)
        k3 = generator @ (vector + 0.5 * h * k2)
        k4 = generator @ (vector + h * k3)
        vector = vector + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if step % check_interval == 0:
            check_drift(step)
    check_drift(steps)
    return DensityMatrix(hermitize(unvectorize(vector, L.dimension)))


@dataclass(frozen=True)
class NessSolution:
    """Every object produced on the way to a non-equilibrium steady state.

    Parameters
    ----------
    split : HamiltonianSplit
        Hamiltonian and its diagonal split.
    baths : BathConfig
        Baths of the rotors.
    transitions : TransitionSet
        Bath-induced jumps.
    liouvillian : Liouvillian
        Generator.
    result : SteadyStateResult
        Steady state and solver diagnostics.
    """

    split: HamiltonianSplit
    baths: BathConfig
    transitions: TransitionSet
    liouvillian: Liouvillian
    result: SteadyStateResult

    @property
    def rho(self) -> DensityMatrix:
        """Steady state."""
        return self.result.rho


@check_input_types
def build_ness(
    model: Union[CCMParams, HamiltonianSplit],
    baths: BathConfig,
    options: Optional[SolverOptions] = None,
) -> NessSolution:
    """Build the model, its transitions and Liouvillian, and solve for the steady state."""
    split = model if isinstance(model, HamiltonianSplit) else build_hamiltonian(model)
    transitions = enumerate_transitions(split, baths)
    liouvillian = build_liouvillian(split, transitions)
    result = solve_steady_state(liouvillian, options)
    LOG.debug(f"Steady state via {result.method}, residual {result.residual:.2e}")
    return NessSolution(split, baths, transitions, liouvillian, result)
