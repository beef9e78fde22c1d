# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Testing of the rotational and heat currents."""

import numpy as np
import pytest
from scipy.linalg import null_space

from rotorchain.errors import StationarityError
from rotorchain.lindblad import (
    BathConfig,
    build_liouvillian,
    build_ness,
    classical_generator,
    enumerate_transitions,
)
from rotorchain.model import CCMParams, build_hamiltonian
from rotorchain.observables import (
    CurrentRecord,
    current_susceptibility,
    gradient_baths,
    heat_currents,
    mean_square_current,
    standard_heat_currents,
    steady_currents,
    sublattice_sums,
    susceptibility_curve,
    thermal_current,
    thermal_current_operator,
    tunneling_current,
    tunneling_current_operator,
)


def test_sublattice_sums():
    """Test the even and odd sums with rotors numbered from 1."""
    assert sublattice_sums([1.0, 2.0, 3.0, 4.0]) == (6.0, 4.0)
    assert sublattice_sums([1.0, 2.0]) == (2.0, 1.0)


def test_current_operators_are_hermitian(chain2: CCMParams, baths2: BathConfig):
    """Test the structure of both current operators."""
    split = build_hamiltonian(chain2)
    transitions = enumerate_transitions(split, baths2)
    for site in (1, 2):
        tunneling = tunneling_current_operator(split, site, 0, 1)
        thermal = thermal_current_operator(transitions, site, 0, 1)
        assert tunneling.hermitian and thermal.hermitian
        dense = tunneling.toarray()
        assert np.allclose(dense, dense.conj().T)
        assert np.allclose(np.diag(dense), 0.0)
        # Reversing the pair reverses the current
        assert tunneling_current_operator(split, site, 1, 0).is_close(-tunneling)
        assert thermal_current_operator(transitions, site, 1, 0).is_close(-thermal)
        # Only the jumps of the rotor itself move its clock index
        assert thermal_current_operator(transitions, site, 0, 1, restrict_to_site=True).is_close(
            thermal
        )


def test_current_operator_validation(chain2: CCMParams, baths2: BathConfig):
    """Test the checks on the rotor and the pair of states."""
    split = build_hamiltonian(chain2)
    transitions = enumerate_transitions(split, baths2)
    with pytest.raises(ValueError, match="two distinct clock states"):
        tunneling_current_operator(split, 1, 1, 1)
    with pytest.raises(ValueError, match="Clock state 3 is outside"):
        thermal_current_operator(transitions, 1, 0, 3)
    with pytest.raises(ValueError, match="Site 3 is out of range"):
        tunneling_current_operator(split, 3, 0, 1)


def test_classical_thermal_current(chain2: CCMParams, baths2: BathConfig):
    """Test that on diagonal states the thermal current is the classical probability flow."""
    split = build_hamiltonian(chain2)
    transitions = enumerate_transitions(split, baths2)
    digits = chain2.clock.digits
    rng = np.random.default_rng(2)
    for _ in range(5):
        populations = rng.random(9)
        populations /= populations.sum()
        rho = np.diag(populations)
        for site in (1, 2):
            expected = 0.0
            for transition in transitions:
                before = digits[transition.source, site - 1]
                after = digits[transition.target, site - 1]
                if (before, after) == (0, 1):
                    expected += transition.rate * populations[transition.source]
                elif (before, after) == (1, 0):
                    expected -= transition.rate * populations[transition.source]
            assert thermal_current(rho, transitions, site, 0, 1) == pytest.approx(
                expected, abs=1e-14
            )
            assert tunneling_current(rho, split, site, 0, 1) == pytest.approx(0.0, abs=1e-15)

            operator = thermal_current_operator(transitions, site, 0, 1)
            second_moment = float(np.sum(populations * operator.diagonal().real ** 2))
            assert mean_square_current(rho, operator) == pytest.approx(second_moment, abs=1e-14)


def test_steady_currents(chain2: CCMParams, baths2: BathConfig):
    """Test the currents of a steady state and their record."""
    solution = build_ness(chain2, baths2)
    record = steady_currents(solution.rho, solution.split, solution.transitions)
    assert isinstance(record, CurrentRecord)
    assert len(record.per_rotor_tun) == len(record.per_rotor_th) == 2
    assert record.total_tun == pytest.approx(sum(record.per_rotor_tun))
    assert record.to_dict()["total_th"] == record.total_th
    assert mean_square_current(
        solution.rho, tunneling_current_operator(solution.split, 1, 0, 1)
    ) >= 0.0


def test_steady_currents_reject_non_steady_states(
    chain2: CCMParams, baths2: BathConfig, random_rho
):
    """Test that a state which is not stationary fails the pair independence check."""
    split = build_hamiltonian(chain2)
    transitions = enumerate_transitions(split, baths2)
    rho = random_rho(9, seed=7)
    with pytest.raises(StationarityError, match="not a steady state"):
        steady_currents(rho, split, transitions)
    record = steady_currents(rho, split, transitions, check_independence=False)
    assert len(record.per_rotor_tun) == 2


@pytest.mark.parametrize("M", [2, 4])
def test_equal_temperatures_carry_no_current(M: int):
    """Test that without a temperature difference the total currents vanish."""
    params = CCMParams.staggered(M, 0.5, np.pi / 2)
    solution = build_ness(params, BathConfig.uniform(M, 1.0, 0.2))
    record = steady_currents(solution.rho, solution.split, solution.transitions)
    assert record.total_tun == pytest.approx(0.0, abs=1e-9)
    assert record.total_th == pytest.approx(0.0, abs=1e-9)


def test_heat_currents(chain2: CCMParams, baths2: BathConfig):
    """Test the first and second laws in a steady state."""
    solution = build_ness(chain2, baths2)
    heat = heat_currents(solution.rho, solution.split, solution.liouvillian, baths2)
    assert abs(heat.first_law_residual) < 1e-9
    assert heat.entropy_production >= -1e-12
    assert heat.entropy_production == pytest.approx(
        -sum(baths2.beta_of(m) * q for m, q in zip((1, 2), heat.qdot_d))
    )
    assert np.allclose(
        heat.qdot_standard,
        standard_heat_currents(solution.rho, solution.split, solution.liouvillian),
        atol=1e-12,
    )
    assert heat.qdot_d_sublattices == (heat.qdot_d[1], heat.qdot_d[0])
    assert set(heat.to_dict()) == {"qdot_d", "qdot_nd", "qdot_standard", "entropy_production"}


def test_heat_currents_reject_non_steady_states():
    """Test that a state off stationarity violates the first law."""
    params = CCMParams.homogeneous(2, 0.5, 0.0)
    split = build_hamiltonian(params)
    baths = BathConfig.uniform(2, 1.0, 0.2)
    L = build_liouvillian(split, enumerate_transitions(split, baths))
    # Every jump out of the classical ground state costs energy
    rho = np.zeros((9, 9))
    rho[0, 0] = 1.0
    with pytest.raises(StationarityError, match="not a steady state"):
        heat_currents(rho, split, L, baths)
    with pytest.raises(ValueError, match="Expected 2 baths"):
        heat_currents(rho, split, L, BathConfig.uniform(3, 1.0, 0.2))


def test_gradient_baths():
    """Test the baths displaced by a temperature step."""
    baths = gradient_baths(4, 1.0, 0.1, 0.2)
    assert baths.beta_of(2) == 1.0
    assert baths.beta_of(1) == pytest.approx(1.0 / 1.1)
    with pytest.raises(ValueError, match="is not positive"):
        gradient_baths(4, 1.0, -2.0, 0.2)


def test_current_susceptibility(chain2: CCMParams, baths2: BathConfig):
    """Test the forward difference of the thermal current."""
    delta_t = 0.01
    record = current_susceptibility(chain2, baths2, delta_t)
    displaced = build_ness(chain2, gradient_baths(2, 1.0, delta_t, baths2.g))
    current = steady_currents(displaced.rho, displaced.split, displaced.transitions).total_th
    # The reference point carries no current
    assert record.current == pytest.approx(current / delta_t, abs=1e-6)
    assert record.delta_t == delta_t
    assert np.isfinite(record.mutual_information)
    assert set(record.to_dict()) == {"current", "mutual_information", "delta_t"}

    with pytest.raises(ValueError, match="must be non-zero"):
        current_susceptibility(chain2, baths2, 0.0)


def test_susceptibility_curve(chain2: CCMParams, baths2: BathConfig):
    """Test one susceptibility record per control parameter."""
    curve = susceptibility_curve(chain2, baths2, np.array([0.0, 0.5]), delta_t=0.01)
    assert len(curve) == 2
    assert curve[1] == current_susceptibility(chain2.with_f(0.5), baths2, 0.01)
    assert all(record.delta_t == 0.01 for record in curve)


@pytest.mark.parametrize("M", [2, pytest.param(4, marks=pytest.mark.slow)])
def test_achiral_phase_carries_no_current(M: int):
    """Test that staggered phases pi / 3 leave every rotor without current."""
    baths = BathConfig.staggered(M, 1.0, 1.1, 0.2)
    for f in np.linspace(0.1, 0.9, 9):
        solution = build_ness(CCMParams.staggered(M, float(f), np.pi / 3), baths)
        record = steady_currents(solution.rho, solution.split, solution.transitions)
        assert np.abs(record.per_rotor_tun).max() < 1e-9
        assert np.abs(record.per_rotor_th).max() < 1e-9


def _classical_populations(transitions) -> np.ndarray:
    """Return the normalized kernel of the rate matrix."""
    kernel = null_space(classical_generator(transitions).toarray())
    assert kernel.shape[1] == 1
    return kernel[:, 0] / kernel[:, 0].sum()


def _classical_flows(transitions, populations: np.ndarray) -> np.ndarray:
    """Return the net 0 -> 1 probability flow of every rotor."""
    digits = transitions.clock.digits
    flows = np.zeros(transitions.clock.M)
    for transition in transitions:
        column = transition.site - 1
        step = (digits[transition.source, column], digits[transition.target, column])
        if step == (0, 1):
            flows[column] += transition.rate * populations[transition.source]
        elif step == (1, 0):
            flows[column] -= transition.rate * populations[transition.source]
    return flows


def test_classical_limit_currents(baths2: BathConfig):
    """Test the currents without transverse field against the classical master equation."""
    solution = build_ness(CCMParams.staggered(2, 0.0, np.pi / 2), baths2)
    record = steady_currents(solution.rho, solution.split, solution.transitions)
    populations = _classical_populations(solution.transitions)
    assert solution.rho.populations == pytest.approx(populations, rel=1e-8)
    assert np.abs(record.per_rotor_tun).max() < 1e-9
    assert np.array(record.per_rotor_th) == pytest.approx(
        _classical_flows(solution.transitions, populations), rel=1e-8
    )
    # Both sub-lattices rotate, at slightly different rates
    assert record.per_rotor_th == pytest.approx((9.852503e-4, 9.673438e-4), rel=1e-6)


@pytest.mark.slow
def test_classical_limit_currents_of_four_rotors(baths4: BathConfig):
    """Test the classical limit of four rotors, where rotors of one sub-lattice agree."""
    solution = build_ness(CCMParams.staggered(4, 0.0, np.pi / 2), baths4)
    record = steady_currents(solution.rho, solution.split, solution.transitions)
    populations = _classical_populations(solution.transitions)
    assert solution.rho.populations == pytest.approx(populations, rel=1e-8)
    assert np.array(record.per_rotor_th) == pytest.approx(
        _classical_flows(solution.transitions, populations), rel=1e-8
    )
    assert np.abs(record.per_rotor_tun).max() < 1e-9
    odd, even = record.per_rotor_th[0::2], record.per_rotor_th[1::2]
    assert abs(odd[0] - odd[1]) < 1e-9
    assert abs(even[0] - even[1]) < 1e-9
    assert odd[0] == pytest.approx(1.680792e-4, rel=1e-6)
    assert even[0] == pytest.approx(1.692689e-4, rel=1e-6)


@pytest.mark.slow
def test_current_peaks(baths4: BathConfig):
    """Test that the thermal current of every rotor peaks before the tunneling current."""
    f_grid = np.round(np.arange(0.42, 0.63, 0.04), 2)
    tunneling, thermal = [], []
    for f in f_grid:
        solution = build_ness(CCMParams.staggered(4, float(f), np.pi / 2), baths4)
        record = steady_currents(solution.rho, solution.split, solution.transitions)
        tunneling.append(np.abs(record.per_rotor_tun))
        thermal.append(np.abs(record.per_rotor_th))
        if f == 0.54:
            assert record.per_rotor_tun[0] * record.per_rotor_tun[1] < 0.0
            assert np.abs(record.per_rotor_tun) == pytest.approx(
                np.array([4.959106e-3, 5.014017e-3] * 2), rel=1e-5
            )
            assert record.per_rotor_th == pytest.approx((3.158854e-3, -2.864976e-3) * 2, rel=1e-5)
    tunneling_peak = f_grid[np.argmax(tunneling, axis=0)]
    thermal_peak = f_grid[np.argmax(thermal, axis=0)]
    assert np.all((tunneling_peak >= 0.5) & (tunneling_peak <= 0.58))
    assert np.all((thermal_peak >= 0.42) & (thermal_peak <= 0.5))
    assert np.all(thermal_peak <= tunneling_peak)


@pytest.mark.parametrize("M", [2, pytest.param(4, marks=pytest.mark.slow)])
def test_observables_are_periodic_in_phase(M: int):
    """Test that shifting the staggered phase by 2 pi / 3 leaves currents and heat unchanged."""
    baths = BathConfig.staggered(M, 1.0, 1.1, 0.2)
    records = []
    for phi in (0.4, 0.4 + 2 * np.pi / 3):
        solution = build_ness(CCMParams.staggered(M, 0.5, phi), baths)
        currents = steady_currents(solution.rho, solution.split, solution.transitions)
        heat = heat_currents(solution.rho, solution.split, solution.liouvillian, baths)
        records.append(
            np.concatenate(
                [currents.per_rotor_tun, currents.per_rotor_th, heat.qdot_d, heat.qdot_nd]
            )
        )
    assert np.abs(records[0] - records[1]).max() < 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("beta_e", [1.0, 0.2])
def test_heat_current_regimes(beta_e: float):
    """Test the sign of the sub-lattice heat currents for a small and a large gradient."""
    baths = BathConfig.staggered(4, beta_e, 1.1, 0.2)
    solution = build_ness(CCMParams.staggered(4, 0.5, np.pi / 2), baths)
    heat = heat_currents(solution.rho, solution.split, solution.liouvillian, baths)
    even, odd = heat.qdot_d_sublattices
    assert abs(heat.first_law_residual) < 1e-9
    assert heat.entropy_production >= -1e-12
    if beta_e == 1.0:
        assert even == pytest.approx(-0.3534757, rel=1e-5)
        assert odd == pytest.approx(-0.3881381, rel=1e-5)
        assert sum(heat.qdot_nd) == pytest.approx(0.7416137, rel=1e-5)
    else:
        # The hot sub-lattice absorbs heat from its baths
        assert even > 0.0 > odd
        assert even == pytest.approx(0.4697635, rel=1e-5)
        assert odd == pytest.approx(-0.7441698, rel=1e-5)
