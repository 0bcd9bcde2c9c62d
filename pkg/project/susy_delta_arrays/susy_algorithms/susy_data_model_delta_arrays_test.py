'''SUSY delta arrays model tests.

Tests of the configurations, the superpotentials, the partner potentials
and the zero modes.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import numpy as np
import pytest
from scipy import integrate

import susy_data_model_delta_arrays as model
from susy_data_tools_delta_arrays import SusyConfigurationError

# -----------------------------------------------------------------------------


@pytest.mark.parametrize('kind', [
    model.FreeParticle(),
    model.DeltaStep(-2.0, 1.0),
    model.DoubleEqual(2.0, 7.0),
    model.DoubleUnequal(2.0, 4.0, 7.0),
    model.TripleUnequal(1.0, 0.5, 2.0, 1.5),
    model.TripleAlternating(2.0, 0.7),
    model.AlternatingArray(1.0, 1.0, 2),
    model.AlternatingComb(3.0, 1.0),
])
def test_config_json_round_trip(kind):

    assert model.config_from_dict(model.config_to_dict(kind)) == kind


@pytest.mark.parametrize('data', [
    {'kind': 'delta_step', 'mu': 0.0, 'g': 1.0},
    {'kind': 'double_equal', 'alpha': 1.0, 'a': 0.0},
    {'kind': 'alternating_array', 'alpha': 1.0, 'a': 1.0, 'J': 0},
    {'kind': 'double_equal', 'alpha': 1.0, 'a': 1.0, 'beta': 2.0},
    {'kind': 'square_well', 'a': 1.0},
    {'alpha': 1.0},
])
def test_invalid_configurations(data):

    with pytest.raises(SusyConfigurationError):
        model.config_from_dict(data)


def test_double_equal_superpotential():

    w = model.build_superpotential(model.DoubleEqual(2.0, 7.0))
    assert w.v_minus == 2.0
    assert w.v_plus == 2.0
    assert w(np.array([-7.0, 0.0, 7.0])) == pytest.approx([14.0] * 3)
    assert w(9.0) == pytest.approx(18.0)
    assert w.jumps() == (2.0, 2.0)


def test_delta_step_superpotential_slopes():

    mu, g = -2.0, 1.0
    w = model.build_superpotential(model.DeltaStep(mu, g))
    assert w.slopes == pytest.approx((0.75, -1.25))
    assert w.jumps()[0] == pytest.approx(mu)


def test_partner_potentials_flip_the_deltas():

    v0, v1 = model.partner_potentials(
        model.build_superpotential(model.DoubleUnequal(1.0, 3.0, 0.5)))
    assert v0.floors == (1.0, 0.0, 9.0)
    assert v1.floors == v0.floors
    assert v0.deltas == ((-0.5, 1.0), (0.5, 3.0))
    assert v1.deltas == ((-0.5, -1.0), (0.5, -3.0))
    assert v0.strength_at(0.5) == 3.0
    assert v0.strength_at(0.0) == 0.0


def test_alternating_array_superpotential_values():

    alpha, a = 1.0, 1.0
    w = model.build_superpotential(model.AlternatingArray(alpha, a, 1))
    assert w.breakpoints == (-1.0, 0.0, 1.0)
    assert w(np.array([-a, 0.0, a])) \
        == pytest.approx([-alpha * a / 2, -alpha * a, -alpha * a / 2])
    assert w.v_minus == pytest.approx(-alpha / 2)
    assert w.v_plus == pytest.approx(-alpha / 2)


def test_alternating_triple_matches_array():

    triple = model.build_superpotential(model.TripleAlternating(2.0, 0.7))
    array = model.build_superpotential(model.AlternatingArray(2.0, 0.7, 1))
    x = np.linspace(-3.0, 3.0, 61)
    assert triple(x) == pytest.approx(array(x))


def test_comb_superpotential_is_periodic():

    alpha, a = 3.0, 1.0
    w = model.build_superpotential(model.AlternatingComb(alpha, a))
    assert w(0.0) == pytest.approx(-alpha * a / 4)
    assert w(a) == pytest.approx(alpha * a / 4)
    x = np.linspace(0.0, 2 * a, 17)
    assert w(x + 2 * a) == pytest.approx(w(x))
    assert w(x - 4 * a) == pytest.approx(w(x))


def test_double_equal_zero_mode_is_fermionic():

    alpha, a = 2.0, 7.0
    w = model.build_superpotential(model.DoubleEqual(alpha, a))
    assert not model.zero_mode(w, 0).normalizable
    mode = model.zero_mode(w, 1)
    assert mode.normalizable
    assert mode.norm_constant == pytest.approx(1 / np.sqrt(2 * a + 1 / alpha))


def test_double_unequal_zero_mode_constant():

    alpha, beta, a = 2.0, 4.0, 7.0
    mode = model.zero_mode(model.build_superpotential(
        model.DoubleUnequal(alpha, beta, a)), 1)
    expected = np.sqrt(2 * alpha * beta
                       / (alpha + 4 * a * alpha * beta + beta))
    assert mode.norm_constant == pytest.approx(expected)


def test_zero_mode_unit_norm_by_quadrature():

    mode = model.zero_mode(model.build_superpotential(
        model.TripleUnequal(1.0, 0.5, 2.0, 1.5)), 1)
    x = np.linspace(-40.0, 40.0, 400001)
    assert integrate.trapezoid(mode.normalized(x) ** 2, x) \
        == pytest.approx(1.0, abs=1e-6)


def test_zero_mode_annihilation():

    w = model.build_superpotential(model.DoubleUnequal(2.0, 4.0, 1.0))
    mode = model.zero_mode(w, 1)
    x = np.array([-3.0, -0.5, 0.3, 2.5])
    residual = model.annihilation_residual(mode, x, 1e-5)
    assert np.max(np.abs(residual)) < 1e-8


def test_delta_step_breaking_has_no_zero_modes():

    w = model.build_superpotential(model.DeltaStep(1.0, 2.0))
    assert not model.zero_mode(w, 0).normalizable
    assert not model.zero_mode(w, 1).normalizable


def test_comb_zero_modes_are_not_normalizable():

    w = model.build_superpotential(model.AlternatingComb(3.0, 1.0))
    mode = model.zero_mode(w, 0)
    assert not mode.normalizable
    with pytest.raises(SusyConfigurationError):
        mode.normalized(0.0)
