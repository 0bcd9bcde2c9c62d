'''SUSY delta arrays Witten index tests.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import numpy as np
import pytest
from scipy import integrate, special

import susy_data_model_delta_arrays as model
import susy_data_scattering_delta_arrays as scattering
import susy_data_witten_delta_arrays as witten
from susy_data_tools_delta_arrays import (SusyConfigurationError,
                                          SusyUnsupportedConfigurationError)

# -----------------------------------------------------------------------------

T_LIST = [1e-1, 1e-2, 1e-3, 1e-4]

# -----------------------------------------------------------------------------


@pytest.mark.parametrize('v', [0.5, 1.0, 3.0, -2.0])
@pytest.mark.parametrize('t', T_LIST)
def test_continuum_term_matches_erfc(v, t):

    expected = np.sign(v) * special.erfc(abs(v) * np.sqrt(t))
    assert witten.continuum_term(v, t) == pytest.approx(expected, abs=1e-8)
    assert witten.continuum_term_closed_form(v, t) \
        == pytest.approx(expected, abs=1e-15)


def test_continuum_term_value():

    assert witten.continuum_term(1.0, 0.04) == pytest.approx(0.7773,
                                                             abs=1e-4)


def test_continuum_term_grows_as_the_regulator_shrinks():

    terms = [witten.continuum_term(1.0, t) for t in T_LIST]
    assert all(np.diff(terms) > 0)
    assert terms[-1] < 1


def test_continuum_term_edge_cases():

    assert witten.continuum_term(0.0, 0.1) == 0.0
    with pytest.raises(SusyConfigurationError):
        witten.continuum_term(1.0, 0.0)


@pytest.mark.parametrize('v', [1.0, 3.0, -0.5])
def test_richardson_limit_of_the_continuum(v):

    terms = [witten.continuum_term(v, t) for t in T_LIST]
    assert witten.richardson_extrapolate(T_LIST, terms) \
        == pytest.approx(np.sign(v), abs=1e-4)


def test_richardson_removes_half_integer_powers():

    t_values = np.array([0.1, 0.01, 0.001])
    values = 2 + 3 * np.sqrt(t_values) - 5 * t_values ** 1.5
    assert witten.richardson_extrapolate(t_values, values) \
        == pytest.approx(2.0, abs=1e-10)


def test_richardson_needs_a_geometric_sequence():

    with pytest.raises(SusyConfigurationError):
        witten.richardson_extrapolate([0.1, 0.05, 0.001], [1.0, 1.0, 1.0])
    with pytest.raises(SusyConfigurationError):
        witten.richardson_extrapolate([0.1, 0.01], [1.0])
    assert witten.richardson_extrapolate([0.1], [0.5]) == 0.5


def test_density_difference():

    assert witten.density_difference(1.0, 0.0) == pytest.approx(1 / np.pi)
    total, _ = integrate.quad(lambda k: witten.density_difference(2.0, k),
                              -np.inf, np.inf)
    assert total == pytest.approx(1.0, abs=1e-8)


def test_density_difference_from_the_phase_shifts():

    kind = model.DoubleEqual(2.0, 7.0)
    k = np.array([0.5, 1.3, 3.0])
    assert witten.density_difference_numerical(kind, k) \
        == pytest.approx(witten.density_difference(2.0, k), abs=1e-6)


@pytest.mark.parametrize('kind', [
    model.DoubleEqual(2.0, 7.0),
    model.TripleAlternating(2.0, 0.7),
    model.AlternatingArray(1.0, 1.0, 2),
])
def test_sector_phase_difference(kind):

    v = witten._threshold(kind)
    for k in (0.4, 1.1, 2.7):
        f = (1j * k - v) / (1j * k + v)
        difference = witten.phase_shift_total(kind, 1, k) \
            - witten.phase_shift_total(kind, 0, k) - np.angle(f)
        assert np.sin(difference) == pytest.approx(0.0, abs=1e-9)


def test_total_phase_of_two_equal_deltas():

    alpha, a = 2.0, 7.0
    for k in (0.3, 1.2, 2.2):
        difference = witten.phase_shift_total(model.DoubleEqual(alpha, a), 0,
                                              k) \
            - scattering.double_equal_total_phase(alpha, a, k)
        assert np.sin(difference) == pytest.approx(0.0, abs=1e-9)


def test_phase_shift_array_is_continuous():

    k = np.linspace(2.0, 3.0, 300)
    phases = witten.phase_shift_total(model.DoubleEqual(2.0, 7.0), 0, k)
    assert np.max(np.abs(np.diff(phases))) < np.pi / 2


def test_phase_shifts_need_equal_thresholds():

    with pytest.raises(SusyUnsupportedConfigurationError):
        witten.phase_shift_total(model.DoubleUnequal(1.0, 2.0, 0.5), 0, 1.0)
    with pytest.raises(SusyConfigurationError):
        witten.phase_shift_total(model.DoubleEqual(2.0, 7.0), 0, -1.0)


def test_index_of_two_equal_deltas():

    report = witten.witten_index(model.DoubleEqual(2.0, 7.0), T_LIST)
    assert (report.z0, report.z1) == (0, 1)
    assert report.v == 2.0
    assert report.extrapolated_continuum == pytest.approx(1.0, abs=1e-4)
    assert report.extrapolated_index == pytest.approx(0.0, abs=1e-4)
    assert report.shifted_index == 0
    assert not report.susy_broken
    for (t, value), (_, index) in zip(report.continuum,
                                      report.index_values):
        assert index == pytest.approx(value - 1)
    assert report.density_difference(0.0) == pytest.approx(0.5 / np.pi)


def test_index_of_the_broken_delta_step():

    report = witten.witten_index(model.DeltaStep(1.0, 2.0), T_LIST)
    assert (report.z0, report.z1) == (0, 0)
    assert report.v is None
    assert report.continuum == ()
    assert report.extrapolated_index == 0.0
    assert report.susy_broken
    with pytest.raises(SusyUnsupportedConfigurationError):
        report.density_difference(1.0)


@pytest.mark.parametrize('J, counts, shifted', [
    (1, (1, 0), 2),
    (2, (0, 1), 0),
])
def test_index_of_alternating_arrays(J, counts, shifted):

    report = witten.witten_index(model.AlternatingArray(2.0, 1.0, J), T_LIST)
    assert (report.z0, report.z1) == counts
    assert report.shifted_index == shifted
    assert report.shifted_index == (-1) ** (J + 1) + 1
    assert report.extrapolated_index == pytest.approx(0.0, abs=1e-4)


def test_index_of_the_comb():

    report = witten.witten_index(model.AlternatingComb(3.0, 1.0), T_LIST)
    assert (report.z0, report.z1) == (1, 1)
    assert report.extrapolated_index == 0.0
    assert not report.susy_broken
    assert report.shifted_index is None


def test_free_particle_counts_as_broken():

    report = witten.witten_index(model.FreeParticle(), T_LIST)
    assert report.extrapolated_index == 0.0
    assert report.susy_broken


def test_report_dictionary():

    data = witten.witten_index(model.DoubleEqual(2.0, 7.0), T_LIST).to_dict()
    assert set(data) == {'z0', 'z1', 'v', 'continuum', 'index_values',
                         'extrapolated_continuum', 'index', 'shifted_index',
                         'susy_broken'}
    assert [entry['t'] for entry in data['continuum']] == T_LIST


def test_array_zero_mode_values():

    alpha, a = 2.0, 1.0
    values = witten.array_zero_mode_values(model.AlternatingArray(alpha, a,
                                                                  1))
    assert values['sector'] == 0
    assert values['points'] == [-a, 0.0, a]
    assert values['values'] == pytest.approx(
        np.exp([-alpha * a / 2, -alpha * a, -alpha * a / 2]))
    assert witten.array_zero_mode_values(
        model.AlternatingArray(alpha, a, 2))['sector'] == 1
    with pytest.raises(SusyUnsupportedConfigurationError):
        witten.array_zero_mode_values(model.DoubleEqual(2.0, 7.0))
