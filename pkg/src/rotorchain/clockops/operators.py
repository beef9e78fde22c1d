# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the clock operators and the many-body operators built from them."""

from beartype import beartype as check_input_types
from beartype.typing import Optional, Union
import numpy as np
import scipy.sparse as sp

from rotorchain.clockops.basis import ClockParams
from rotorchain.misc.accuracy import OPERATOR_ACCURACY
from rotorchain.misc.checks import check_hermitian, check_site, check_square
from rotorchain.misc.defaults import DENSE_LIMIT
from rotorchain.typing import OperatorLike, Real


@check_input_types
def clock_phase(N_s: int) -> complex:
    """Return the primitive root ``omega = exp(2 pi i / N_s)``."""
    if N_s < 2:
        raise ValueError(f"A rotor needs at least 2 clock states, got N_s={N_s}.")
    return np.exp(2j * np.pi / N_s)


@check_input_types
def build_sigma(N_s: int) -> np.ndarray:
    """Build the single-rotor cyclic shift ``sigma``.

    Parameters
    ----------
    N_s : int
        Number of clock states, at least 2.

    Returns
    -------
    ~numpy.ndarray
        ``N_s x N_s`` complex matrix with ones at ``(k, k + 1 mod N_s)``.
    """
    if N_s < 2:
        raise ValueError(f"A rotor needs at least 2 clock states, got N_s={N_s}.")
    sigma = np.zeros((N_s, N_s), dtype=np.complex128)
    rows = np.arange(N_s)
    sigma[rows, (rows + 1) % N_s] = 1.0
    return sigma


@check_input_types
def build_mu(N_s: int) -> np.ndarray:
    """Build the single-rotor clock operator ``mu = diag(1, omega, ..., omega^(N_s - 1))``.

    Parameters
    ----------
    N_s : int
        Number of clock states, at least 2.

    Returns
    -------
    ~numpy.ndarray
        ``N_s x N_s`` complex diagonal matrix.
    """
    omega = clock_phase(N_s)
    return np.diag(omega ** np.arange(N_s)).astype(np.complex128)


class ManyBodyOperator:
    """Sparse operator on the product clock space of a chain.

    Parameters
    ----------
    matrix : ~numpy.ndarray or ~scipy.sparse.spmatrix
        Square matrix of dimension ``N_s**M``. Stored in compressed-row form.
    params : ClockParams
        Chain size.
    hermitian : bool, default: None
        When ``True``, the matrix is checked to equal its conjugate transpose
        within ``OPERATOR_ACCURACY``. ``None`` means unknown.

    Notes
    -----
    Instances are treated as immutable. Every operation returns a new operator.
    """

    def __init__(
        self, matrix: OperatorLike, params: ClockParams, hermitian: Optional[bool] = None
    ):
        """Initialize the ``ManyBodyOperator`` class."""
        stored = sp.csr_matrix(matrix, dtype=np.complex128, copy=True)
        check_square(stored, params.dimension)
        stored.sum_duplicates()
        stored.eliminate_zeros()
        if hermitian:
            check_hermitian(stored, OPERATOR_ACCURACY, "operator")
        self._matrix = stored
        self._params = params
        self._hermitian = hermitian

    @property
    def matrix(self) -> sp.csr_matrix:
        """Compressed-row storage of the operator."""
        return self._matrix

    @property
    def params(self) -> ClockParams:
        """Chain size the operator acts on."""
        return self._params

    @property
    def dimension(self) -> int:
        """Hilbert dimension."""
        return self._params.dimension

    @property
    def hermitian(self) -> Optional[bool]:
        """Hermiticity flag; ``None`` when not established."""
        return self._hermitian

    @property
    def nnz(self) -> int:
        """Number of stored non-zero entries."""
        return self._matrix.nnz

    def dagger(self) -> "ManyBodyOperator":
        """Return the conjugate transpose."""
        return ManyBodyOperator(self._matrix.conj().T, self._params, self._hermitian)

    def diagonal(self) -> np.ndarray:
        """Return the diagonal as a complex vector."""
        return self._matrix.diagonal()

    def toarray(self) -> np.ndarray:
        """Return a dense copy.

        Raises
        ------
        ValueError
            If the dimension exceeds ``DENSE_LIMIT``.
        """
        if self.dimension > DENSE_LIMIT:
            raise ValueError(
                f"Dense conversion is limited to dimension {DENSE_LIMIT}, got {self.dimension}."
            )
        return self._matrix.toarray()

    def expectation(self, rho: np.ndarray) -> complex:
        """Return ``Tr(rho A)`` for a dense density matrix ``rho``."""
        # Tr(rho A) = sum_ij A_ij rho_ji
        return complex(self._matrix.multiply(np.asarray(rho).T).sum())

    def apply(self, vector: np.ndarray) -> np.ndarray:
        """Apply the operator to a state vector or to the columns of a matrix."""
        return self._matrix @ vector

    def is_close(self, other: "ManyBodyOperator", tolerance: Real = OPERATOR_ACCURACY) -> bool:
        """Check if two operators agree entry-wise within ``tolerance``."""
        difference = (self._matrix - other._matrix).tocoo().data
        return not difference.size or float(np.abs(difference).max()) <= tolerance

    def _combine(self, other: "ManyBodyOperator", sign: int) -> "ManyBodyOperator":
        if not isinstance(other, ManyBodyOperator):
            return NotImplemented
        if other._params != self._params:
            raise ValueError(f"Cannot combine operators on {self._params} and {other._params}.")
        hermitian = True if (self._hermitian and other._hermitian) else None
        return ManyBodyOperator(self._matrix + sign * other._matrix, self._params, hermitian)

    def __add__(self, other: "ManyBodyOperator") -> "ManyBodyOperator":
        """Sum of two operators."""
        return self._combine(other, 1)

    def __sub__(self, other: "ManyBodyOperator") -> "ManyBodyOperator":
        """Difference of two operators."""
        return self._combine(other, -1)

    def __mul__(self, scalar: Union[Real, complex]) -> "ManyBodyOperator":
        """Multiply by a scalar."""
        if not np.isscalar(scalar):
            return NotImplemented
        hermitian = self._hermitian if np.imag(scalar) == 0 else None
        return ManyBodyOperator(self._matrix * scalar, self._params, hermitian)

    __rmul__ = __mul__

    def __neg__(self) -> "ManyBodyOperator":
        """Negated operator."""
        return self * -1.0

    def __matmul__(self, other):
        """Compose with another operator, or apply to a dense array."""
        if isinstance(other, ManyBodyOperator):
            if other._params != self._params:
                raise ValueError(
                    f"Cannot compose operators on {self._params} and {other._params}."
                )
            return ManyBodyOperator(self._matrix @ other._matrix, self._params)
        return self._matrix @ other

    def __repr__(self) -> str:
        """Representation of the ``ManyBodyOperator`` class."""
        return (
            f"ManyBodyOperator(dimension={self.dimension}, nnz={self.nnz}, "
            f"hermitian={self._hermitian})"
        )


def identity(params: ClockParams) -> ManyBodyOperator:
    """Return the identity on the chain."""
    return ManyBodyOperator(sp.identity(params.dimension, format="csr"), params, hermitian=True)


def zero(params: ClockParams) -> ManyBodyOperator:
    """Return the zero operator on the chain."""
    return ManyBodyOperator(sp.csr_matrix((params.dimension,) * 2), params, hermitian=True)


@check_input_types
def embed_local(op: OperatorLike, site: int, params: ClockParams) -> ManyBodyOperator:
    """Embed a single-rotor operator at a site of the chain.

    Parameters
    ----------
    op : ~numpy.ndarray or ~scipy.sparse.spmatrix
        ``N_s x N_s`` operator.
    site : int
        1-based rotor index. Site 1 is the most significant digit.
    params : ClockParams
        Chain size.

    Returns
    -------
    ManyBodyOperator
        ``I ⊗ ... ⊗ op ⊗ ... ⊗ I``.
    """
    check_square(op, params.N_s)
    check_site(site, params.M)
    left = sp.identity(params.N_s ** (site - 1), format="csr")
    right = sp.identity(params.N_s ** (params.M - site), format="csr")
    embedded = sp.kron(sp.kron(left, sp.csr_matrix(op)), right, format="csr")
    return ManyBodyOperator(embedded, params)


@check_input_types
def local_projector(site: int, state: int, params: ClockParams) -> ManyBodyOperator:
    """Return the projector ``x_k`` of rotor ``site`` onto clock state ``state``."""
    if not 0 <= state < params.N_s:
        raise ValueError(f"Clock state {state} is outside [0, {params.N_s - 1}].")
    check_site(site, params.M)
    diagonal = (params.digits[:, site - 1] == state).astype(np.complex128)
    return ManyBodyOperator(sp.diags(diagonal, format="csr"), params, hermitian=True)


@check_input_types
def two_site_bond(
    op_a: OperatorLike,
    site_a: int,
    op_b: OperatorLike,
    site_b: int,
    phase: Real,
    params: ClockParams,
) -> ManyBodyOperator:
    """Build the Hermitian bond ``A_a B_b^† exp(i phase) + h.c.``.

    Parameters
    ----------
    op_a, op_b : ~numpy.ndarray or ~scipy.sparse.spmatrix
        Single-rotor operators.
    site_a, site_b : int
        Distinct 1-based rotor indices.
    phase : Real
        Chiral phase in radians.
    params : ClockParams
        Chain size.

    Returns
    -------
    ManyBodyOperator
        Hermitian bond operator.
    """
    if site_a == site_b:
        raise ValueError(f"A bond needs two distinct sites, got {site_a} twice.")
    a = embed_local(op_a, site_a, params).matrix
    b = embed_local(op_b, site_b, params).matrix
    term = (a @ b.conj().T) * np.exp(1j * phase)
    return ManyBodyOperator(term + term.conj().T, params, hermitian=True)
