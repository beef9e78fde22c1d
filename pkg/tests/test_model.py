# Copyright (C) 2024 rotorchain developers
# SPDX-License-Identifier: MIT
"""Testing of the chiral clock Hamiltonians."""

import numpy as np
import pytest

from rotorchain.clockops import ClockParams, build_mu, embed_local, identity
from rotorchain.model import (
    CCMParams,
    HamiltonianSplit,
    Variant,
    build_hamiltonian,
    build_hccm,
    build_hccm_rotated,
    build_symmetry_projector,
    diagonal_energies,
    homogeneous_phases,
    project_hamiltonian,
    staggered_phases,
    symmetry_operator,
)


def test_phase_patterns():
    """Test the staggered and homogeneous phase patterns."""
    assert staggered_phases(np.pi / 2, 4) == (-np.pi / 2, np.pi / 2, -np.pi / 2, np.pi / 2)
    assert homogeneous_phases(0.3, 3) == (0.3, 0.3, 0.3)


def test_ccm_params():
    """Test the model parameters and their validation."""
    params = CCMParams.staggered(4, 0.5, np.pi / 2)
    assert params.M == 4
    assert params.N_s == 3
    assert params.variant is Variant.STANDARD
    assert params.boundary == "periodic"
    assert params.bonds()[-1] == (4, 1, np.pi / 2)
    assert params.with_f(0.2).f == 0.2
    assert params.with_phases([0.0] * 4).phases == (0.0,) * 4
    assert params.to_dict() == {
        "M": 4,
        "N_s": 3,
        "f": 0.5,
        "phases": list(staggered_phases(np.pi / 2, 4)),
        "variant": "standard",
    }
    assert CCMParams(ClockParams(2), 1, (0, 0), "rotated").variant is Variant.ROTATED

    with pytest.raises(ValueError, match="should lie in"):
        params.with_f(1.5)
    with pytest.raises(ValueError, match="Expected 4 bond phases"):
        params.with_phases([0.0, 0.0])
    with pytest.raises(TypeError, match="'phases'"):
        params.with_phases(["a"] * 4)


@pytest.mark.parametrize("variant", [Variant.STANDARD, Variant.ROTATED])
def test_split_structure(variant: Variant):
    """Test that the split is exact and every part Hermitian."""
    split = build_hamiltonian(CCMParams.staggered(3, 0.37, 0.9, variant))
    assert split.H.is_close(split.H_D + split.H_ND, 0.0)
    assert split.H.hermitian and split.H_D.hermitian and split.H_ND.hermitian
    assert np.all(split.H_ND.diagonal() == 0)
    assert split.dimension == 27
    dense = split.H.toarray()
    assert np.allclose(dense, dense.conj().T, atol=1e-12)


def test_standard_at_f_one():
    """Test that the pure transverse term has no diagonal part."""
    split = build_hccm(CCMParams.staggered(3, 1.0, np.pi / 2))
    assert split.H_D.nnz == 0
    assert np.all(diagonal_energies(split) == 0.0)


def test_standard_at_f_zero():
    """Test the classical energies of the interaction term."""
    params = CCMParams.staggered(3, 0.0, np.pi / 2)
    split = build_hccm(params)
    assert split.H_ND.nnz == 0
    energies = diagonal_energies(split)
    for index, digits in enumerate(params.clock.digits):
        expected = -sum(
            2 * np.cos(2 * np.pi * (digits[j - 1] - digits[k - 1]) / 3 + phase)
            for j, k, phase in params.bonds()
        )
        assert np.isclose(energies[index], expected, atol=1e-12)


def test_two_rotors_keep_both_bonds():
    """Test that two rotors with periodic wrap count the bond twice."""
    split = build_hccm(CCMParams.homogeneous(2, 0.0, 0.0))
    energies = diagonal_energies(split)
    assert np.isclose(energies[0], -4.0)
    # |01> pays 2 cos(2 pi / 3) on each bond
    assert np.isclose(energies[1], 2.0)


def test_diagonal_energies_match_elements(chain4: CCMParams):
    """Test the diagonal energies against direct matrix elements."""
    split = build_hccm(chain4)
    energies = diagonal_energies(split)
    dense = split.H.toarray()
    assert energies.dtype == np.float64
    assert np.allclose(energies, np.diag(dense).real, atol=1e-14)
    assert np.allclose(np.diag(split.H_D.toarray()).real, energies)


def test_rotated_at_f_one():
    """Test that the rotated model is diagonal at f = 1 with ground state |0...0>."""
    split = build_hccm_rotated(CCMParams.staggered(4, 1.0, np.pi / 2, Variant.ROTATED))
    assert split.H_ND.nnz == 0
    energies = diagonal_energies(split)
    assert np.isclose(energies[0], -8.0)
    assert np.argmin(energies) == 0
    assert np.isclose(np.sort(energies)[1], -5.0)

    split = build_hccm_rotated(CCMParams.staggered(3, 0.0, np.pi / 2, Variant.ROTATED))
    assert split.H_D.nnz == 0


@pytest.mark.parametrize("f", [0.2, 0.5, 0.8])
def test_rotated_is_isospectral(f: float):
    """Test that both variants share the same spectrum."""
    standard = build_hccm(CCMParams.staggered(4, f, np.pi / 2))
    rotated = build_hccm_rotated(CCMParams.staggered(4, f, np.pi / 2, Variant.ROTATED))
    assert np.allclose(
        np.linalg.eigvalsh(standard.H.toarray()),
        np.linalg.eigvalsh(rotated.H.toarray()),
        atol=1e-10,
    )


def test_phase_periodicity():
    """Test that shifting a phase by 2 pi leaves the Hamiltonian unchanged."""
    params = CCMParams.staggered(3, 0.4, 0.7)
    shifted = params.with_phases([params.phases[0] + 2 * np.pi, *params.phases[1:]])
    assert build_hccm(params).H.is_close(build_hccm(shifted).H)


def test_variant_mismatch(chain4: CCMParams, rotated4: CCMParams):
    """Test that the builders refuse the other variant."""
    with pytest.raises(ValueError, match="expects the standard variant"):
        build_hccm(rotated4)
    with pytest.raises(ValueError, match="expects the rotated variant"):
        build_hccm_rotated(chain4)
    assert build_hamiltonian(rotated4).params is rotated4


def test_split_validation(chain2: CCMParams):
    """Test that a malformed split is refused."""
    split = build_hccm(chain2)
    with pytest.raises(ValueError, match="diagonal part has off-diagonal entries"):
        HamiltonianSplit(split.H, split.H_ND, split.H_D, chain2)
    with pytest.raises(ValueError, match="off-diagonal part has a non-zero diagonal"):
        HamiltonianSplit(split.H, split.H_D, identity(chain2.clock), chain2)


def test_symmetry_operator(rotated4: CCMParams):
    """Test the global symmetry and its commutation with the rotated model."""
    clock = rotated4.clock
    U = symmetry_operator(clock)
    expected = identity(clock)
    for site in range(1, clock.M + 1):
        expected = expected @ embed_local(build_mu(3).conj().T, site, clock)
    assert U.is_close(expected)

    H = build_hccm_rotated(rotated4).H
    assert (U @ H - H @ U).is_close(identity(clock) * 0.0)


@pytest.mark.parametrize("M, D_0", [(2, 3), (3, 9), (4, 27)])
def test_symmetry_sector_dimension(M: int, D_0: int):
    """Test the size of the symmetric sector."""
    projector = build_symmetry_projector(CCMParams.staggered(M, 0.5, 0.3, Variant.ROTATED))
    assert projector.dimension == D_0
    assert projector.isometry.shape == (3**M, D_0)
    isometry = projector.isometry.toarray()
    assert np.allclose(isometry.conj().T @ isometry, np.eye(D_0))


def test_symmetry_sector_two_rotors():
    """Test the basis states spanning the sector of two rotors."""
    params = CCMParams.staggered(2, 0.5, 0.3, Variant.ROTATED)
    projector = build_symmetry_projector(params)
    clock = params.clock
    assert projector.indices.tolist() == [
        clock.index([0, 0]),
        clock.index([1, 2]),
        clock.index([2, 1]),
    ]
    assert repr(projector) == "SymmetryProjector(ClockParams(M=2, N_s=3), D_0=3)"


def test_symmetry_sector_ground_energy(rotated4: CCMParams):
    """Test that the sector contains the ground state."""
    split = build_hccm_rotated(rotated4)
    projector = build_symmetry_projector(rotated4)
    sector = project_hamiltonian(projector, split.H)
    assert sector.shape == (27, 27)
    assert np.isclose(
        np.linalg.eigvalsh(sector)[0], np.linalg.eigvalsh(split.H.toarray())[0], atol=1e-10
    )
    # Lifted sector vectors are eigenvectors of the full Hamiltonian
    energies, vectors = np.linalg.eigh(sector)
    lifted = projector.lift(vectors[:, 0])
    assert np.allclose(split.H.apply(lifted), energies[0] * lifted, atol=1e-10)


def test_symmetry_projector_needs_rotated_variant(chain4: CCMParams):
    """Test that the standard model has no sector projector."""
    with pytest.raises(ValueError, match="only defined for the rotated variant"):
        build_symmetry_projector(chain4)
