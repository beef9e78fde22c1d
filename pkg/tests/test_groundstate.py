# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Testing of the ground-state analysis."""

import numpy as np
import pytest

from rotorchain.clockops import ClockParams
from rotorchain.groundstate import (
    BinderPoint,
    Sector,
    binder_crossings,
    binder_cumulant,
    binder_point,
    default_sector,
    fit_gap_exponent,
    gap_curve,
    ground_state,
    ground_state_currents,
    ground_tunneling_current,
    lowest_eigenpairs,
    order_parameter,
    order_parameter_mean,
    order_parameter_moments,
    order_parameter_values,
)
from rotorchain.model import CCMParams, Variant, build_hamiltonian


def polarized_superposition(clock: ClockParams) -> np.ndarray:
    """Return (|0...0> + |1...1> + |2...2>) / sqrt(3)."""
    psi = np.zeros(clock.dimension)
    for k in range(3):
        psi[clock.index([k] * clock.M)] = 1.0 / np.sqrt(3.0)
    return psi


@pytest.mark.parametrize("M", [2, 3, 4])
def test_rotated_spectrum_at_f_one(M: int):
    """Test the classical spectrum of the rotated model without interactions."""
    params = CCMParams.staggered(M, 1.0, np.pi / 2, Variant.ROTATED)
    full = ground_state(params, sector=Sector.FULL)
    assert full.ground_energy == pytest.approx(-2.0 * M)
    # One rotor moved out of state 0
    assert full.gap == pytest.approx(3.0)

    symmetric = ground_state(params)
    assert symmetric.sector is Sector.SYMMETRIC
    assert symmetric.ground_energy == pytest.approx(-2.0 * M)
    # The cheapest symmetric excitation moves two rotors
    assert symmetric.gap == pytest.approx(6.0)
    assert abs(symmetric.ground_state[0]) == pytest.approx(1.0)


def test_sector_ground_energy(rotated4: CCMParams):
    """Test that the symmetric sector holds the full-space ground state."""
    split = build_hamiltonian(rotated4)
    full = lowest_eigenpairs(split, k=1)
    sector = lowest_eigenpairs(split, k=1, sector=Sector.SYMMETRIC)
    assert sector.ground_energy == pytest.approx(full.ground_energy, abs=1e-10)

    state = sector.ground_state
    assert state.shape == (81,)
    assert np.linalg.norm(state) == pytest.approx(1.0)
    assert np.allclose(split.H.apply(state), sector.ground_energy * state, atol=1e-9)


def test_variants_share_ground_energy(chain4: CCMParams, rotated4: CCMParams):
    """Test that both variants have the same ground energy."""
    assert default_sector(chain4) is Sector.FULL
    assert default_sector(rotated4) is Sector.SYMMETRIC
    assert ground_state(chain4).ground_energy == pytest.approx(
        ground_state(rotated4).ground_energy, abs=1e-10
    )


@pytest.mark.parametrize("variant", [Variant.STANDARD, Variant.ROTATED])
def test_lanczos_matches_dense(variant: Variant):
    """Test the iterative eigensolver against dense diagonalization."""
    split = build_hamiltonian(CCMParams.staggered(4, 0.3, np.pi / 2, variant))
    dense = lowest_eigenpairs(split, k=3)
    lanczos = lowest_eigenpairs(split, k=3, dense_limit=10)
    assert np.allclose(lanczos.energies, dense.energies, atol=1e-8)
    assert np.allclose(dense.energies, np.linalg.eigvalsh(split.H.toarray())[:3], atol=1e-10)
    # Operators are accepted as well as splits
    assert lowest_eigenpairs(split.H, k=1).ground_energy == pytest.approx(dense.ground_energy)


def test_eigensolve_validation(chain2: CCMParams):
    """Test the checks on the requested eigenpairs."""
    split = build_hamiltonian(chain2)
    with pytest.raises(ValueError, match="Cannot compute 10 eigenpairs"):
        lowest_eigenpairs(split, k=10)
    with pytest.raises(ValueError, match="needs a HamiltonianSplit"):
        lowest_eigenpairs(split.H, sector=Sector.SYMMETRIC)
    with pytest.raises(ValueError, match="only defined for the rotated variant"):
        lowest_eigenpairs(split, sector=Sector.SYMMETRIC)
    with pytest.raises(ValueError, match="at least two eigenpairs"):
        lowest_eigenpairs(split, k=1).gap


def test_degeneracy():
    """Test the count of degenerate ground levels."""
    params = CCMParams.homogeneous(2, 0.0, 0.0)
    # Without transverse field the three aligned states are degenerate
    assert lowest_eigenpairs(build_hamiltonian(params), k=4).degeneracy == 3


def test_order_parameter(clock3: ClockParams):
    """Test the diagonal clock order parameter."""
    values = order_parameter_values(clock3)
    assert values[0] == pytest.approx(2.0)
    assert values[clock3.index([1, 1, 1])] == pytest.approx(-1.0)
    assert values[clock3.index([0, 1, 2])] == pytest.approx(0.0)
    operator = order_parameter(clock3)
    assert operator.hermitian
    assert np.allclose(operator.diagonal(), values)

    ground = np.zeros(27)
    ground[0] = 1.0
    assert order_parameter_mean(ground, clock3) == pytest.approx(2.0)
    assert order_parameter_mean(np.outer(ground, ground), clock3) == pytest.approx(2.0)
    with pytest.raises(ValueError, match="Expected a state of dimension 27"):
        order_parameter_mean(np.ones(9) / 3, clock3)


def test_binder_cumulant(clock3: ClockParams):
    """Test the Binder cumulant of ordered states."""
    ground = np.zeros(27)
    ground[0] = 1.0
    m2, m4 = order_parameter_moments(ground, clock3)
    assert (m2, m4) == (pytest.approx(4.0), pytest.approx(16.0))
    assert binder_cumulant(m2, m4) == pytest.approx(1.0)

    m2, m4 = order_parameter_moments(polarized_superposition(clock3), clock3)
    assert (m2, m4) == (pytest.approx(2.0), pytest.approx(6.0))
    assert binder_cumulant(m2, m4) == pytest.approx(0.75)

    assert binder_cumulant(1, 3) == 0.0
    with pytest.raises(ValueError, match="must be positive"):
        binder_cumulant(0.0, 1.0)


def test_rotated_order_parameter(clock3: ClockParams):
    """Test that the rotated order parameter moves one rotor by one step."""
    operator = order_parameter(clock3, Variant.ROTATED)
    assert operator.hermitian
    assert np.allclose(operator.diagonal(), 0.0)
    assert order_parameter(CCMParams.staggered(3, 0.5, 0.0, Variant.ROTATED)).is_close(operator)
    assert order_parameter(CCMParams.staggered(3, 0.5, 0.0)).is_close(order_parameter(clock3))

    ground = np.zeros(27)
    ground[0] = 1.0
    assert operator.apply(ground)[clock3.index([0, 0, 1])] == pytest.approx(1.0 / 3.0)
    assert order_parameter_mean(ground, clock3, Variant.ROTATED) == pytest.approx(0.0)
    # Independent rotors with <s^2> = 2 and <s^4> = 6 for s = sigma + sigma^†
    m2, m4 = order_parameter_moments(ground, clock3, Variant.ROTATED)
    assert (m2, m4) == (pytest.approx(2.0 / 3.0), pytest.approx(10.0 / 9.0))
    rho = np.outer(ground, ground)
    assert order_parameter_moments(rho, clock3, Variant.ROTATED) == (
        pytest.approx(m2),
        pytest.approx(m4),
    )


def test_binder_point():
    """Test the moments of the disordered rotated ground state."""
    point = binder_point(CCMParams.staggered(3, 1.0, np.pi / 2, Variant.ROTATED))
    assert isinstance(point, BinderPoint)
    assert (point.f, point.M) == (1.0, 3)
    assert (point.m2, point.m4) == (pytest.approx(2.0 / 3.0), pytest.approx(10.0 / 9.0))
    # B = 3 / (4 M) for decoupled rotors
    assert point.B == pytest.approx(0.25)

    ordered = binder_point(CCMParams.staggered(3, 0.0, 0.0, Variant.ROTATED))
    assert ordered.B > point.B


@pytest.mark.parametrize("phi", [np.pi / 8, np.pi / 2])
def test_symmetric_ground_state_has_no_order(phi: float):
    """Test that the sector ground state has a vanishing order parameter along f."""
    for f in np.linspace(0.0, 1.0, 21):
        params = CCMParams.staggered(4, float(f), phi, Variant.ROTATED)
        state = ground_state(params, k=1).ground_state
        assert abs(order_parameter_mean(state, params)) < 1e-10
        assert abs(order_parameter_mean(np.outer(state, state.conj()), params)) < 1e-10


def test_binder_crossings():
    """Test the crossings of synthetic Binder curves."""
    f = np.linspace(0.0, 1.0, 10)
    curves = {2: (f, 1.0 - f), 4: (f, 1.5 - 2.0 * f), 6: (f, 2.0 - 3.0 * f)}
    crossings = binder_crossings(curves)
    assert [(small, large) for small, large, _ in crossings] == [(2, 4), (2, 6), (4, 6)]
    for _, _, root in crossings:
        assert root == pytest.approx(0.5)

    assert binder_crossings({2: (f, f), 4: (f, f + 1.0)}) == []


def test_fit_gap_exponent():
    """Test the scaling fit on a synthetic power law."""
    f_c = 0.4
    curve = [(f, 2.0 * (f - f_c) ** 0.8) for f in np.linspace(0.45, 0.9, 8)]
    assert fit_gap_exponent(curve, f_c) == pytest.approx(0.8)
    # The critical point itself and closed gaps are discarded
    assert fit_gap_exponent(curve + [(f_c, 0.0), (0.95, 0.0)], f_c) == pytest.approx(0.8)

    with pytest.raises(ValueError, match="at least 3 usable points"):
        fit_gap_exponent(curve[:2], f_c)
    with pytest.raises(ValueError, match="one side of the critical point"):
        fit_gap_exponent(curve + [(0.1, 0.3)], f_c)


def test_gap_curve():
    """Test the gap along a grid of control parameters."""
    params = CCMParams.staggered(3, 0.5, np.pi / 2, Variant.ROTATED)
    curve = gap_curve(params, [1.0, 0.9])
    assert curve[0] == (1.0, pytest.approx(6.0))
    assert curve[1][1] > 0.0
    assert gap_curve(params, [1.0], sector=Sector.FULL)[0][1] == pytest.approx(3.0)
    with pytest.raises(ValueError, match="should lie in"):
        gap_curve(params, [1.5])


def test_ground_state_currents(rotated4: CCMParams):
    """Test that neighbouring rotors carry opposite ground-state currents."""
    currents = ground_state_currents(rotated4)
    assert len(currents) == 4
    assert currents[0] == pytest.approx(-currents[1], abs=1e-8)
    assert currents[2] == pytest.approx(-currents[3], abs=1e-8)


def test_ground_tunneling_current(chain4: CCMParams, rotated4: CCMParams):
    """Test that the classical ground state at f = 1 carries no current."""
    currents = ground_tunneling_current(rotated4, [1.0, 0.5])
    assert len(currents) == 2
    assert currents[0] == pytest.approx((0.0,) * 4, abs=1e-15)
    with pytest.raises(ValueError, match="defined for the rotated variant"):
        ground_tunneling_current(chain4, [0.5])


def test_rotated_ground_current_decays_above_transition():
    """Test the ground-state tunneling current of four rotors on both sides of f_c."""
    params = CCMParams.staggered(4, 0.5, np.pi / 2, Variant.ROTATED)
    ordered, disordered = ground_tunneling_current(params, [0.3, 0.6])
    assert np.abs(ordered) == pytest.approx(np.full(4, 0.4116365), rel=1e-5)
    assert np.abs(disordered) == pytest.approx(np.full(4, 0.02920506), rel=1e-5)
    assert ordered[0] * ordered[1] < 0.0
    assert disordered[0] * disordered[1] < 0.0


@pytest.mark.slow
def test_rotated_ground_current_sharpens_with_size():
    """Test that the drop of the ground-state current steepens from four to six rotors."""
    f_grid = [0.42, 0.5, 0.6]
    curves = {}
    for M in (4, 6):
        params = CCMParams.staggered(M, 0.5, np.pi / 2, Variant.ROTATED)
        curves[M] = [abs(currents[0]) for currents in ground_tunneling_current(params, f_grid)]
    slopes = {M: (curve[0] - curve[1]) / (f_grid[1] - f_grid[0]) for M, curve in curves.items()}
    assert slopes[6] > slopes[4] > 0.0
    assert curves[6][2] < curves[4][2]


@pytest.mark.parametrize("f", np.linspace(0.0, 1.0, 11))
def test_standard_ground_state_carries_no_current(f: float):
    """Test that the real ground state of the standard model has no tunneling current."""
    params = CCMParams.staggered(4, float(f), np.pi / 2)
    assert np.abs(ground_state_currents(params)).max() < 1e-9


@pytest.mark.slow
def test_binder_crossings_bracket_transition():
    """Test that the Binder curves of four to eight rotors cross near f_c."""
    f_grid = np.round(np.arange(0.40, 0.525, 0.01), 2)
    crossings = {}
    for pattern in (CCMParams.homogeneous, CCMParams.staggered):
        curves = {}
        for M in (4, 6, 8):
            B = [binder_point(pattern(M, float(f), np.pi / 8, Variant.ROTATED)).B for f in f_grid]
            curves[M] = (f_grid, np.array(B))
        crossings[pattern.__name__] = binder_crossings(curves)

    homogeneous = crossings["homogeneous"]
    staggered = crossings["staggered"]
    assert [(small, large) for small, large, _ in homogeneous] == [(4, 6), (4, 8), (6, 8)]
    assert [(small, large) for small, large, _ in staggered] == [(4, 6), (4, 8), (6, 8)]
    for (_, _, plain), (_, _, chiral) in zip(homogeneous, staggered):
        assert 0.44 <= plain <= 0.49
        assert 0.44 <= chiral <= 0.49
        assert chiral >= plain
