'''SUSY delta arrays Witten index module.

The functions in the module compute the supersymmetric phase shifts of the
configurations with equal thresholds, the difference between the spectral
densities of the two sectors and the heat kernel regularized Witten index
I_W(t) = z_0 - z_1 + int dk (rho_0 - rho_1) exp(-t (k^2 + v^2)), with its
t -> 0 limit obtained by Richardson extrapolation.

This script requires the following modules:
    * dataclasses
    * logging
    * numpy
    * scipy
    * typing
    * susy_data_comb_delta_arrays
    * susy_data_model_delta_arrays
    * susy_data_scattering_delta_arrays
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * split_phase_shifts - the two eigenchannel phase shifts.
    * phase_shift_total - total phase shift of a sector.
    * density_difference - rho_0 - rho_1 in closed form.
    * density_difference_numerical - rho_0 - rho_1 from the phase shifts.
    * continuum_term - heat kernel regularized continuum contribution.
    * continuum_term_closed_form - sign(v) erfc(|v| sqrt(t)).
    * richardson_extrapolate - t -> 0 limit on a geometric sequence.
    * zero_mode_counts - normalizable zero modes of both sectors.
    * array_zero_mode_values - zero mode of a finite array on the lattice.
    * witten_index - regularized Witten index of a configuration.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass
import logging
from typing import Optional, Tuple

import numpy as np
from scipy import integrate, special

import susy_data_comb_delta_arrays
import susy_data_model_delta_arrays
from susy_data_model_delta_arrays import (AlternatingArray, AlternatingComb,
                                          FreeParticle)
import susy_data_scattering_delta_arrays
import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyConfigurationError,
                                          SusyUnsupportedConfigurationError)

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class WittenReport:
    """Zero mode counts, continuum contributions and the regularized index.

    continuum holds (t, int dk (rho_0 - rho_1) exp(-t(k^2 + v^2))) and
    index_values (t, z0 - z1 + continuum). shifted_index is z0 - z1 + 1,
    the value obtained when the t -> 0 limit of the continuum term is taken
    as +1 regardless of the sign of v. Without equal thresholds (and for the
    comb) the continuum part is empty and the index counts zero modes only.
    """

    z0: int
    z1: int
    v: Optional[float]
    continuum: Tuple[Tuple[float, float], ...]
    index_values: Tuple[Tuple[float, float], ...]
    extrapolated_continuum: Optional[float]
    extrapolated_index: float
    shifted_index: Optional[int]

    @property
    def susy_broken(self):
        return self.z0 == 0 and self.z1 == 0

    def density_difference(self, k):
        if self.v is None:
            raise SusyUnsupportedConfigurationError(
                'no density difference without equal thresholds')
        return density_difference(self.v, k)

    def to_dict(self):
        return {'z0': self.z0, 'z1': self.z1, 'v': self.v,
                'continuum': [{'t': t, 'value': value}
                              for t, value in self.continuum],
                'index_values': [{'t': t, 'value': value}
                                 for t, value in self.index_values],
                'extrapolated_continuum': self.extrapolated_continuum,
                'index': self.extrapolated_index,
                'shifted_index': self.shifted_index,
                'susy_broken': self.susy_broken}

# -----------------------------------------------------------------------------


def _threshold(kind):
    """Common value v of v_- and v_+, or None when they differ."""

    superpotential = susy_data_model_delta_arrays.build_superpotential(kind)
    v_minus, v_plus = superpotential.v_minus, superpotential.v_plus
    if abs(v_plus - v_minus) > SUSY_DEFAULTS.slope_threshold \
            * max(1.0, abs(v_plus)):
        return None

    return float(v_plus)


def split_phase_shifts(amps):
    """(delta_+, delta_-) = (1/2i) log(sigma +- sqrt(rho_r rho_l)).

    Principal branches; for unit modulus arguments the phase shifts are
    half the arguments.

    :param amps: ScatteringAmplitudes with k_- = k_+.
    :return: tuple -- (delta_+, delta_-).
    """

    root = np.sqrt(complex(amps.rho_r * amps.rho_l))
    plus = np.log(complex(amps.sigma_r + root)) / 2j
    minus = np.log(complex(amps.sigma_r - root)) / 2j

    return (float(plus.real), float(minus.real))


def _wrapped_total(amps):
    plus, minus = split_phase_shifts(amps)
    total = plus + minus

    return float(total - np.pi * np.round(total / np.pi))


def phase_shift_total(kind, sector, k):
    """Total phase shift delta_s = delta_s+ + delta_s- of a sector.

    A scalar momentum returns the phase modulo pi in [-pi/2, pi/2]; an
    array of increasing momenta returns the phases made continuous along
    the array.

    :param kind: ConfigKind with v_- = v_+.
    :param sector: 0 or 1.
    :param k: momentum or increasing array of momenta, k > 0.
    :return: float or array -- the total phase shift.
    """

    v = _threshold(kind)
    if v is None:
        raise SusyUnsupportedConfigurationError(
            f'{kind!r} has different thresholds, the phase shifts need '
            'v_- = v_+')

    momenta = np.atleast_1d(np.asarray(k, dtype=float))
    if np.any(momenta <= 0):
        raise SusyConfigurationError('the momenta must be positive')

    phases = [_wrapped_total(susy_data_scattering_delta_arrays.amplitudes_for(
        kind, sector, float(value) ** 2 + v ** 2)) for value in momenta]

    if np.ndim(k) == 0:
        return phases[0]

    return susy_data_scattering_delta_arrays.unwrap_phases(phases)

# -----------------------------------------------------------------------------


def density_difference(v, k):
    """rho_0(k) - rho_1(k) = (v / pi) / (k^2 + v^2).

    :param v: common threshold slope.
    :param k: momentum or array of momenta.
    :return: float or array.
    """

    k = np.asarray(k, dtype=float)
    value = (v / np.pi) / (k ** 2 + v ** 2)

    if value.ndim == 0:
        return float(value)

    return value


def density_difference_numerical(kind, k, step=None):
    """rho_0(k) - rho_1(k) from central differences of the phase shifts.

    rho_s = L/2pi + (1/2pi) d delta_s/dk; the L terms cancel.

    :param kind: ConfigKind with v_- = v_+.
    :param k: momentum or array of momenta, k > 0.
    :param step: finite difference step, default 1e-5 max(|v|, 1).
    :return: float or array.
    """

    v = _threshold(kind)
    if v is None:
        raise SusyUnsupportedConfigurationError(
            f'{kind!r} has different thresholds')
    if step is None:
        step = 1e-5 * max(abs(v), 1.0)

    values = []
    for momentum in np.atleast_1d(np.asarray(k, dtype=float)):
        grid = np.array([momentum - step, momentum + step])
        difference = phase_shift_total(kind, 0, grid) \
            - phase_shift_total(kind, 1, grid)
        # the two sectors are unwrapped separately
        jump = difference[1] - difference[0]
        jump -= np.pi * np.round(jump / np.pi)
        values.append(jump / (2 * step) / (2 * np.pi))

    if np.ndim(k) == 0:
        return float(values[0])

    return np.array(values)

# -----------------------------------------------------------------------------


def continuum_term(v, t, tol=SUSY_DEFAULTS.quad_tol):
    """int dk (rho_0 - rho_1) exp(-t (k^2 + v^2)) over the real line.

    The integrand is even; [0, K] is split in geometric panels starting at
    |v| and closed where the tail bound 2 |v| exp(-t (K^2 + v^2)) / (pi K)
    falls below the tolerance. The panels are summed pairwise.

    :param v: common threshold slope.
    :param t: positive regulator.
    :param tol: tolerance of the tail and of the panels.
    :return: float -- the continuum contribution.
    """

    if t <= 0:
        raise SusyConfigurationError('the regulator t must be positive')
    if v == 0:
        return 0.0

    speed = abs(v)

    def tail(cut):
        return 2 * speed * np.exp(-t * (cut ** 2 + v ** 2)) / (np.pi * cut)

    edges = [0.0, speed]
    while tail(edges[-1]) > tol:
        edges.append(2 * edges[-1])

    def integrand(k):
        return np.exp(-t * (k ** 2 + v ** 2)) / (k ** 2 + v ** 2)

    panels = [integrate.quad(integrand, lower, upper, epsabs=tol * 1e-2,
                             epsrel=tol, limit=200)[0]
              for lower, upper in zip(edges[:-1], edges[1:])]
    total = 2 * speed / np.pi * np.sum(panels)

    return float(np.sign(v) * total)


def continuum_term_closed_form(v, t):
    """Closed form sign(v) (1 - erf(|v| sqrt(t))) of the continuum term.

    :param v: common threshold slope.
    :param t: regulator, positive.
    :return: float -- the continuum term.
    """

    return float(np.sign(v) * special.erfc(abs(v) * np.sqrt(t)))

# -----------------------------------------------------------------------------


def richardson_extrapolate(t_values, values, first_exponent=0.5):
    """t -> 0 limit of values sampled on a geometric sequence of t.

    The values are taken as L + c_1 t^p + c_2 t^(p+1) + ... with
    p = first_exponent, which is the expansion of erfc(|v| sqrt(t)).
    Each level of the tableau removes one power.

    :param t_values: positive decreasing geometric sequence.
    :param values: samples at t_values.
    :param first_exponent: leading power of t.
    :return: float -- the extrapolated limit.
    """

    t_values = np.asarray(t_values, dtype=float)
    column = np.asarray(values, dtype=float)
    if t_values.size != column.size or t_values.size == 0:
        raise SusyConfigurationError('t_values and values must match')
    if np.any(t_values <= 0):
        raise SusyConfigurationError('the regulators must be positive')
    if t_values.size == 1:
        return float(column[0])

    ratios = t_values[1:] / t_values[:-1]
    ratio = ratios[0]
    if not (ratio < 1 and np.allclose(ratios, ratio, rtol=1e-9, atol=0)):
        raise SusyConfigurationError(
            't_values must be a decreasing geometric sequence')

    for level in range(t_values.size - 1):
        factor = ratio ** (first_exponent + level)
        column = (column[1:] - factor * column[:-1]) / (1 - factor)

    return float(column[0])

# -----------------------------------------------------------------------------


def zero_mode_counts(kind):
    """(z0, z1): normalizable zero modes of the two sectors.

    The comb has one zero mode per sector, non normalizable but satisfying
    the Bloch condition with q = 0.
    """

    if isinstance(kind, AlternatingComb):
        modes = susy_data_comb_delta_arrays.comb_zero_modes(kind.alpha,
                                                            kind.a)
        return modes.z0, modes.z1

    superpotential = susy_data_model_delta_arrays.build_superpotential(kind)
    counts = [int(susy_data_model_delta_arrays.zero_mode(
        superpotential, sector).normalizable) for sector in (0, 1)]

    return counts[0], counts[1]


def array_zero_mode_values(kind):
    """Zero mode of a finite alternating array at the deltas.

    For J odd the normalizable zero mode is exp(+W) (sector 0), for J even
    it is exp(-W) (sector 1).

    :param kind: AlternatingArray.
    :return: dict -- sector, norm constant and the values at x = n a,
     unnormalized and normalized.
    """

    if not isinstance(kind, AlternatingArray):
        raise SusyUnsupportedConfigurationError(
            'lattice values are defined for finite alternating arrays')

    superpotential = susy_data_model_delta_arrays.build_superpotential(kind)
    sector = 0 if kind.J % 2 == 1 else 1
    mode = susy_data_model_delta_arrays.zero_mode(superpotential, sector)
    points = np.asarray(superpotential.breakpoints)

    return {'sector': sector, 'norm_constant': mode.norm_constant,
            'points': points.tolist(),
            'values': np.atleast_1d(mode(points)).tolist(),
            'normalized': np.atleast_1d(mode.normalized(points)).tolist()}

# -----------------------------------------------------------------------------


def witten_index(kind, t_values):
    """Heat kernel regularized Witten index of a configuration.

    :param kind: ConfigKind.
    :param t_values: positive decreasing regulators, geometric for the
     extrapolation.
    :return: WittenReport.
    """

    function_name = witten_index.__name__
    susy_data_tools_delta_arrays \
        .susy_function_header_print_data(function_name, kind)

    z0, z1 = zero_mode_counts(kind)
    t_values = [float(t) for t in t_values]

    if isinstance(kind, AlternatingComb):
        return WittenReport(z0, z1, None, (), (), None, float(z0 - z1),
                            None)

    v = _threshold(kind)
    if v is None:
        logger.warning('Different thresholds in %s, only the zero modes are'
                       ' counted', kind)
        return WittenReport(z0, z1, None, (), (), None, float(z0 - z1),
                            None)

    if isinstance(kind, FreeParticle):
        logger.info('Free particle: no zero modes and no continuum term')

    terms = [continuum_term(v, t) for t in t_values]
    for t, term in zip(t_values, terms):
        logger.debug('t = %g, continuum term %.12f', t, term)

    limit = richardson_extrapolate(t_values, terms) if terms else None
    index = float(z0 - z1 + limit) if limit is not None else float(z0 - z1)

    return WittenReport(
        z0, z1, v, tuple(zip(t_values, terms)),
        tuple((t, z0 - z1 + term) for t, term in zip(t_values, terms)),
        limit, index, z0 - z1 + 1)

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    report = witten_index(susy_data_model_delta_arrays.DoubleEqual(2.0, 7.0),
                          [1e-1, 1e-2, 1e-3, 1e-4])
    logger.info('Witten index report: %s', report.to_dict())

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
