'''SUSY delta arrays oracle tests.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import numpy as np
import pytest

import susy_data_model_delta_arrays as model
import susy_data_oracle_delta_arrays as oracle
from susy_data_tools_delta_arrays import SusyNoScatteringError

# -----------------------------------------------------------------------------


def _single_delta(strength):
    return model.PotentialSpec((0.0,), (0.0, 0.0), ((0.0, strength),))


def test_zone_propagator_at_zero_momentum():

    step = oracle.zone_propagator(0.0, 2.0)
    assert step == pytest.approx(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_free_transfer_matrix_is_identity():

    free = model.potential_for(model.FreeParticle(), 0)
    matrix = oracle.transfer_matrix(free, 3.0)
    assert matrix.entries == pytest.approx(np.eye(2))


@pytest.mark.parametrize('strength', [-2.0, 0.5, 3.0])
def test_single_delta_amplitudes(strength):

    k = 1.3
    amps = oracle.oracle_amplitudes(_single_delta(strength), k ** 2)
    assert amps.sigma_r == pytest.approx(2j * k / (2j * k - strength))
    assert amps.rho_r == pytest.approx(strength / (2j * k - strength))
    assert amps.sigma_l == pytest.approx(amps.sigma_r)
    assert amps.flux_residual < 1e-12


def test_determinant_matches_momentum_ratio():

    potential = model.potential_for(model.DoubleUnequal(1.0, 2.0, 0.5), 0)
    matrix = oracle.transfer_matrix(potential, 6.0)
    assert matrix.determinant_check < 1e-12


def test_closed_channels_raise():

    potential = model.potential_for(model.DoubleEqual(2.0, 1.0), 0)
    with pytest.raises(SusyNoScatteringError):
        oracle.oracle_amplitudes(potential, 1.0)


def test_single_attractive_delta_bound_state():

    energies = oracle.oracle_bound_states(_single_delta(-2.0))
    assert energies == pytest.approx([-1.0], abs=1e-9)


def test_dispersion_without_deltas():

    k, a = 0.7, 1.5
    assert oracle.oracle_dispersion(0.0, a, k) \
        == pytest.approx(np.cos(2 * k * a))


def test_dispersion_same_in_both_sectors():

    for k in (0.3, 2.0, 5.5):
        assert oracle.oracle_dispersion(3.0, 1.0, k, 0) \
            == pytest.approx(oracle.oracle_dispersion(3.0, 1.0, k, 1))


def test_kick_and_plane_wave_basis():

    state = oracle.delta_kick(2.0) @ np.array([1.0, 0.5])
    assert state == pytest.approx(np.array([1.0, 2.5]))
    k, x = 1.3, 0.7
    basis = oracle.plane_wave_basis(k, x)
    assert basis[:, 0] == pytest.approx(
        np.exp(1j * k * x) * np.array([1.0, 1j * k]))
    assert np.linalg.det(basis) == pytest.approx(-2j * k)
