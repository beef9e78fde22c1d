# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides typing of values for rotorchain."""

from beartype.typing import Sequence, Union
import numpy as np
import scipy.sparse as sp

Real = Union[int, float, np.integer, np.floating]
"""Type used to refer to both integers and floats as possible values."""

RealSequence = Union[np.ndarray, Sequence[Real]]
"""Type used to refer to ``Real`` types as a ``Sequence`` type.

Notes
-----
:class:`numpy.ndarrays <numpy.ndarray>` are also accepted because they are
the overlaying data structure behind most rotorchain objects.
"""

SiteSet = Union[Sequence[int], set, frozenset]
"""Collection of 1-based rotor indices."""

SparseMatrix = sp.spmatrix
"""Sparse matrix type used for every many-body operator and superoperator."""

OperatorLike = Union[np.ndarray, sp.spmatrix]
"""Dense or sparse matrix accepted where either representation is meaningful."""
