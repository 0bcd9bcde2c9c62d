'''SUSY delta arrays comb tests.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import numpy as np
import pytest

import susy_data_comb_delta_arrays as comb
import susy_data_oracle_delta_arrays as oracle
from susy_data_tools_delta_arrays import (SusyConfigurationError,
                                          SusyInvalidStateError)

# -----------------------------------------------------------------------------

ALPHA = 3.0
A = 1.0

# -----------------------------------------------------------------------------


def test_dispersion_at_zero_momentum():

    assert comb.dispersion_g(0.0, ALPHA, A) \
        == pytest.approx(1 - (ALPHA * A) ** 2 / 2)


def test_dispersion_matches_monodromy():

    for k in (0.1, 0.9, 2.5, 4.0, 7.3):
        for sector in (0, 1):
            assert comb.dispersion_g(k, ALPHA, A) \
                == pytest.approx(oracle.oracle_dispersion(ALPHA, A, k, sector),
                                 abs=1e-9)


def test_dispersion_imaginary_momentum():

    for kappa in (0.4, ALPHA / 2, 2.2):
        assert comb.dispersion_g(1j * kappa, ALPHA, A) \
            == pytest.approx(comb.dispersion_g_hyperbolic(kappa, ALPHA, A))
    assert comb.dispersion_g_hyperbolic(ALPHA / 2, ALPHA, A) \
        == pytest.approx(1.0)


def test_dispersion_array():

    k = np.linspace(0.0, 3.0, 7)
    values = comb.dispersion_g(k, ALPHA, A)
    assert values.shape == (7,)
    assert values[0] == pytest.approx(comb.dispersion_g(0.0, ALPHA, A))


def test_propagating_bands():

    bands = comb.propagating_bands(ALPHA, A, 14.0)
    assert len(bands) == 4
    for band in bands[:-1]:
        for k in band.k_range:
            assert abs(comb.dispersion_g(k, ALPHA, A)) - 1 \
                == pytest.approx(0.0, abs=1e-10)
    assert bands[-1].k_range[1] == 14.0
    for n, band in enumerate(bands, start=1):
        assert band.k_range[0] < n * np.pi < band.k_range[1]
        assert band.propagating
        assert band.energy_range[0] \
            == pytest.approx(band.k_range[0] ** 2 + ALPHA ** 2 / 4)


def test_free_comb_has_one_band():

    bands = comb.propagating_bands(0.0, A, 5.0)
    assert len(bands) == 1
    assert bands[0].k_range == (0.0, 5.0)


def test_propagating_bands_invalid():

    with pytest.raises(SusyConfigurationError):
        comb.propagating_bands(ALPHA, A, 0.0)


def test_nonpropagating_band_at_zero_quasimomentum():

    band = comb.nonpropagating_band(ALPHA, A)
    idx = int(np.argmin(np.abs(band.q_values)))
    q_zero = band.q_values[idx]
    assert band.kappa_values[idx] == ALPHA / 2
    assert (q_zero, -ALPHA / 2) in band.rejected
    assert all(kappa < 0 for _, kappa in band.rejected)
    assert band.a_critical == pytest.approx(2 / ALPHA)


def test_nonpropagating_band_roots_solve_the_dispersion():

    band = comb.nonpropagating_band(ALPHA, A, q_samples=21)
    for q, kappa in zip(band.q_values, band.kappa_values):
        if np.isfinite(kappa):
            assert comb.dispersion_g_hyperbolic(kappa, ALPHA, A) \
                == pytest.approx(np.cos(2 * q * A), abs=1e-9)


@pytest.mark.parametrize('factor, exists', [(0.99, False), (1.01, True)])
def test_upper_edge_and_critical_width(factor, exists):

    a = factor * 2 / ALPHA
    band = comb.nonpropagating_band(ALPHA, a, q_samples=11)
    assert band.exists_upper_edge is exists
    kappa = comb.upper_edge_kappa(ALPHA, a)
    assert (kappa is not None) is exists
    if exists:
        assert 0 < kappa < ALPHA / 2
        assert comb.dispersion_g(1j * kappa, ALPHA, a) \
            == pytest.approx(-1.0, abs=1e-10)
        assert band.band.k_range[0] == kappa


def test_upper_edge_at_the_critical_width():

    assert comb.upper_edge_kappa(ALPHA, 2 / ALPHA) == 0.0
    assert comb.upper_edge_kappa(-ALPHA, 2 / ALPHA) == 0.0


def test_upper_edge_for_the_wide_comb():

    band = comb.nonpropagating_band(ALPHA, A, q_samples=11)
    assert band.exists_upper_edge
    assert band.to_dict()['kappa_upper_edge'] == band.upper_edge_kappa


def test_curvature_mismatch_vanishes_at_critical_width():

    a_c = 2 / ALPHA
    assert comb.curvature_mismatch(ALPHA, a_c, np.pi / (2 * a_c)) \
        == pytest.approx(0.0, abs=1e-12)
    assert comb.curvature_mismatch(ALPHA, a_c, 0.0) < 0


@pytest.mark.parametrize('sector', [0, 1])
def test_bloch_state(sector):

    k = 2.5
    q = np.arccos(comb.dispersion_g(k, ALPHA, A)) / (2 * A)
    state = comb.bloch_wavefunction(q, k, sector, ALPHA, A)
    assert np.max(state.matching_residuals()) < 1e-10
    assert state.bloch_residual() < 1e-10
    closed = comb.propagating_cell_coefficients(q, k, ALPHA, A, sector)
    assert np.asarray(closed) == pytest.approx(
        np.asarray(state.cell_coefficients), abs=1e-8)


def test_bloch_state_translation():

    k = 2.5
    q = np.arccos(comb.dispersion_g(k, ALPHA, A)) / (2 * A)
    state = comb.bloch_wavefunction(q, k, 0, ALPHA, A)
    x = np.array([0.3, 1.4])
    assert state(x + 2 * A) == pytest.approx(np.exp(2j * q * A) * state(x))


def test_bloch_state_off_the_curve_raises():

    with pytest.raises(SusyInvalidStateError):
        comb.bloch_wavefunction(0.3, 2.5, 0, ALPHA, A)


@pytest.mark.parametrize('sector, kappa, d_coefficient', [
    (1, ALPHA / 2, np.exp(-A * ALPHA)),
    (0, -ALPHA / 2, np.exp(A * ALPHA)),
])
def test_band_edge_states(sector, kappa, d_coefficient):

    state = comb.bloch_wavefunction(0.0, 1j * kappa, sector, ALPHA, A)
    assert np.asarray(state.cell_coefficients) == pytest.approx(
        np.array([1.0, 0.0, 0.0, d_coefficient]), abs=1e-9)


def test_comb_zero_modes():

    modes = comb.comb_zero_modes(ALPHA, A)
    low, high = np.exp(-ALPHA * A / 4), np.exp(ALPHA * A / 4)
    assert modes.lattice_values['psi0_even_sites'] == pytest.approx(low)
    assert modes.lattice_values['psi0_odd_sites'] == pytest.approx(high)
    assert modes.lattice_values['psi1_even_sites'] == pytest.approx(high)
    assert modes.lattice_values['psi1_odd_sites'] == pytest.approx(low)
    assert modes.bloch_defects == pytest.approx((0.0, 0.0), abs=1e-12)
    assert modes.index_contribution == 0
    assert not modes.susy_broken
    assert not modes.bosonic.normalizable


def test_g_curve_frame():

    frame = comb.g_curve_frame(ALPHA, A, 3.0, samples=31)
    assert list(frame.columns) == ['k', 'g']
    assert frame['g'].iloc[0] == pytest.approx(1 - (ALPHA * A) ** 2 / 2)
    frame = comb.g_curve_frame(ALPHA, A, 3.0, samples=31, imaginary=True)
    assert list(frame.columns) == ['kappa', 'g']
