# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the GKLS Liouvillian superoperator.

Density matrices are vectorized by column stacking: entry ``(r, c)`` of a
``D x D`` matrix sits at position ``r + c D``. With this convention
``vec(A X B) = (B^T ⊗ A) vec(X)``.
"""

from beartype import beartype as check_input_types
from beartype.typing import Dict, Optional, Union
import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigs
from scipy.sparse.linalg import norm as sparse_norm

from rotorchain.clockops.operators import ManyBodyOperator
from rotorchain.errors import protect_linalg
from rotorchain.lindblad.transitions import TransitionSet
from rotorchain.logger import LOG
from rotorchain.misc.defaults import DENSE_SUPEROPERATOR_LIMIT
from rotorchain.model.hamiltonian import HamiltonianSplit
from rotorchain.typing import OperatorLike


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Stack the columns of a square matrix into a vector."""
    return np.asarray(rho).reshape(-1, order="F")


def unvectorize(vector: np.ndarray, dimension: Optional[int] = None) -> np.ndarray:
    """Rebuild a square matrix from its stacked columns."""
    if dimension is None:
        dimension = int(round(np.sqrt(vector.size)))
    if dimension * dimension != vector.size:
        raise ValueError(f"A vector of size {vector.size} is not a stacked square matrix.")
    return np.asarray(vector).reshape((dimension, dimension), order="F")


def _as_sparse(op: Union[OperatorLike, ManyBodyOperator]) -> sp.csr_matrix:
    if isinstance(op, ManyBodyOperator):
        return op.matrix
    return sp.csr_matrix(op, dtype=np.complex128)


def spre(op: Union[OperatorLike, ManyBodyOperator]) -> sp.csr_matrix:
    """Return the superoperator of left multiplication ``X -> A X``."""
    matrix = _as_sparse(op)
    return sp.kron(sp.identity(matrix.shape[0]), matrix, format="csr")


def spost(op: Union[OperatorLike, ManyBodyOperator]) -> sp.csr_matrix:
    """Return the superoperator of right multiplication ``X -> X A``."""
    matrix = _as_sparse(op)
    return sp.kron(matrix.T, sp.identity(matrix.shape[0]), format="csr")


def commutator_superoperator(H: Union[OperatorLike, ManyBodyOperator]) -> sp.csr_matrix:
    """Return the superoperator of ``X -> -i [H, X]``."""
    return (-1j * (spre(H) - spost(H))).tocsr()


def dissipator_superoperator(transitions: TransitionSet) -> sp.csr_matrix:
    """Return the superoperator of the jumps ``L = |j><j'|`` with their rates.

    ``X -> sum W (L X L^† - {L^† L, X} / 2)``. The jump part moves population
    ``X[j', j']`` to ``X[j, j]``. The anticommutator damps entry ``(r, c)`` by
    half the sum of the escape rates of ``r`` and ``c``.
    """
    D = transitions.dimension
    stride = D + 1
    jumps = sp.coo_matrix(
        (transitions.rates, (transitions.targets * stride, transitions.sources * stride)),
        shape=(D * D, D * D),
    ).tocsr()
    escape = np.bincount(transitions.sources, weights=transitions.rates, minlength=D)
    damping = -0.5 * (escape[:, None] + escape[None, :])
    return (jumps + sp.diags(vectorize(damping))).tocsr()


class Liouvillian:
    """Sparse generator ``L`` of the master equation ``d vec(rho)/dt = L vec(rho)``.

    Parameters
    ----------
    hamiltonian : ~scipy.sparse.csr_matrix
        Commutator part ``-i [H, .]``.
    dissipators : dict
        Dissipator superoperator of every bath, keyed by 1-based site.
    dimension : int
        Hilbert dimension ``D``. The superoperator has size ``D^2``.
    """

    def __init__(
        self,
        hamiltonian: sp.csr_matrix,
        dissipators: Dict[int, sp.csr_matrix],
        dimension: int,
    ):
        """Initialize the ``Liouvillian`` class."""
        size = dimension * dimension
        for block in (hamiltonian, *dissipators.values()):
            if block.shape != (size, size):
                raise ValueError(f"Expected superoperator blocks of shape {(size, size)}.")
        total = hamiltonian.copy()
        for block in dissipators.values():
            total = total + block
        self._hamiltonian = hamiltonian
        self._dissipators = dict(sorted(dissipators.items()))
        self._matrix = total.tocsr()
        self._dimension = dimension

    @property
    def matrix(self) -> sp.csr_matrix:
        """Full sparse superoperator."""
        return self._matrix

    @property
    def hamiltonian_part(self) -> sp.csr_matrix:
        """Commutator part of the generator."""
        return self._hamiltonian

    @property
    def dimension(self) -> int:
        """Hilbert dimension ``D``."""
        return self._dimension

    @property
    def size(self) -> int:
        """Superoperator dimension ``D^2``."""
        return self._dimension * self._dimension

    @property
    def sites(self) -> list:
        """Sites with an attached dissipator."""
        return list(self._dissipators)

    def dissipator(self, site: int) -> sp.csr_matrix:
        """Return the dissipator superoperator of the bath at ``site``."""
        try:
            return self._dissipators[site]
        except KeyError:
            raise KeyError(f"There is no dissipator at site {site}.") from None

    def norm(self) -> float:
        """Return the Frobenius norm of the superoperator."""
        return float(sparse_norm(self._matrix))

    def infinity_norm(self) -> float:
        """Return the maximum absolute row sum of the superoperator."""
        return float(sparse_norm(self._matrix, np.inf))

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Return ``L(rho)`` as a matrix."""
        return unvectorize(self._matrix @ vectorize(rho), self._dimension)

    def apply_dissipator(self, site: int, rho: np.ndarray) -> np.ndarray:
        """Return ``D_m(rho)`` for the bath at ``site``."""
        return unvectorize(self.dissipator(site) @ vectorize(rho), self._dimension)

    def apply_dual(self, site: int, X: Union[OperatorLike, ManyBodyOperator]) -> np.ndarray:
        """Return the Heisenberg-picture dissipator ``D*_m(X)``.

        ``D*_m`` is defined by ``Tr(X D_m(rho)) = Tr(D*_m(X) rho)`` for every ``rho``.
        """
        if isinstance(X, ManyBodyOperator):
            X = X.matrix
        dense = X.toarray() if sp.issparse(X) else np.asarray(X)
        dual = self.dissipator(site).conj().T @ vectorize(dense.conj().T)
        return unvectorize(dual, self._dimension).conj().T

    def trace_functional(self) -> np.ndarray:
        """Return ``vec(1)^T L``, zero for a trace-preserving generator."""
        identity = vectorize(np.eye(self._dimension))
        return self._matrix.T @ identity

    def __repr__(self) -> str:
        """Representation of the ``Liouvillian`` class."""
        return (
            f"Liouvillian(dimension={self._dimension}, size={self.size}, "
            f"nnz={self._matrix.nnz}, baths={len(self._dissipators)})"
        )


@check_input_types
def build_liouvillian(
    H: Union[HamiltonianSplit, ManyBodyOperator], transitions: TransitionSet
) -> Liouvillian:
    """Assemble ``-i [H, .] + sum_m D_m`` from a Hamiltonian and its transitions.

    Parameters
    ----------
    H : HamiltonianSplit or ManyBodyOperator
        Hamiltonian of the chain.
    transitions : TransitionSet
        Jumps of every bath. One dissipator block is built per site present.

    Returns
    -------
    Liouvillian
        Sparse generator with individually retrievable dissipators.
    """
    operator = H.H if isinstance(H, HamiltonianSplit) else H
    if operator.dimension != transitions.dimension:
        raise ValueError(
            f"Hamiltonian dimension {operator.dimension} does not match "
            f"transition dimension {transitions.dimension}."
        )
    dissipators = {
        site: dissipator_superoperator(transitions.for_site(site))
        for site in transitions.site_list()
    }
    liouvillian = Liouvillian(commutator_superoperator(operator), dissipators, operator.dimension)
    LOG.debug(f"Assembled {liouvillian!r}")
    return liouvillian


@protect_linalg
def liouvillian_gap(
    L: Liouvillian, k: int = 6, dense_limit: int = DENSE_SUPEROPERATOR_LIMIT
) -> float:
    """Return the second-smallest eigenvalue modulus of the Liouvillian.

    The smallest modulus belongs to the steady state and is zero. A strictly
    positive gap signals a unique steady state.

    Parameters
    ----------
    L : Liouvillian
        Generator.
    k : int, default: 6
        Eigenvalues requested from ARPACK when the dense path is not taken.
    dense_limit : int, default: DENSE_SUPEROPERATOR_LIMIT
        Largest superoperator size diagonalized densely.
    """
    if L.size <= dense_limit:
        eigenvalues = np.linalg.eigvals(L.matrix.toarray())
    else:
        # Shift off the origin so that the shift-invert factorization stays regular.
        eigenvalues = eigs(
            L.matrix.tocsc(), k=k, sigma=1e-3, which="LM", return_eigenvectors=False
        )
    moduli = np.sort(np.abs(eigenvalues))
    return float(moduli[1])
