# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Provides the energy gap along a control-parameter grid and its scaling exponent."""

from beartype import beartype as check_input_types
from beartype.typing import Optional, Sequence, Tuple
import numpy as np

from rotorchain.groundstate.spectrum import Sector, ground_state
from rotorchain.logger import LOG
from rotorchain.misc.checks import check_in_interval
from rotorchain.model.params import CCMParams
from rotorchain.typing import Real

MIN_FIT_POINTS = 3
"""Fewest usable points accepted by :func:`fit_gap_exponent`."""


@check_input_types
def gap_curve(
    params: CCMParams, f_grid: Sequence[Real], sector: Optional[Sector] = None
) -> list:
    """Return ``(f, Delta)`` for every control parameter of ``f_grid``.

    Parameters
    ----------
    params : CCMParams
        Model parameters; ``f`` is replaced by the grid values.
    f_grid : Sequence[Real]
        Control parameters in ``[0, 1]``.
    sector : Sector, default: None
        Space of the eigensolves. The symmetric sector for the rotated variant and
        the full space otherwise when ``None``.

    Notes
    -----
    The default sector changes what the rotated variant reports. At ``f = 1`` the
    symmetric-sector gap is ``6``, the cost of moving two rotors, while the
    full-space gap is the single-rotor cost ``3``.
    """
    curve = []
    for f in f_grid:
        check_in_interval(f, 0.0, 1.0, "f")
        spectrum = ground_state(params.with_f(float(f)), k=2, sector=sector)
        curve.append((float(f), spectrum.gap))
        LOG.debug(f"Gap at f={f}: {spectrum.gap:.6e} ({spectrum.sector.value} sector)")
    return curve


@check_input_types
def fit_gap_exponent(curve: Sequence[Tuple[Real, Real]], f_c_estimate: Real) -> float:
    """Fit ``Delta ~ |f - f_c|^(z nu)`` by least squares in log-log scale.

    Points with ``Delta <= 0`` or ``f == f_c_estimate`` are discarded.

    Returns
    -------
    float
        Slope of ``log Delta`` against ``log |f - f_c|``.

    Raises
    ------
    ValueError
        If the usable points lie on both sides of ``f_c_estimate`` or fewer than
        three remain.
    """
    points = np.array([(f, gap) for f, gap in curve if gap > 0 and f != f_c_estimate], dtype=float)
    if len(points) < MIN_FIT_POINTS:
        raise ValueError(
            f"The fit needs at least {MIN_FIT_POINTS} usable points, got {len(points)}."
        )
    distance = points[:, 0] - f_c_estimate
    if distance.min() < 0 < distance.max():
        raise ValueError("The fitted points must all lie on one side of the critical point.")
    slope, _ = np.polyfit(np.log(np.abs(distance)), np.log(points[:, 1]), 1)
    return float(slope)
