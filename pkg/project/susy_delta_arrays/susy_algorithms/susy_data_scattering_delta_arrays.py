'''SUSY delta arrays scattering module.

The functions in the module evaluate the closed form scattering amplitudes of
the delta configurations in both sectors, apply the supersymmetric maps
between the sectors, assemble the S-matrices with their eigenphases and check
the conservation of the probability fluxes.

Conventions: a wave coming from the left is exp(ik_x) + rho_r exp(-ik_x) on
the left and sigma_r exp(ipx) on the right; a wave coming from the right is
exp(-ipx) + rho_l exp(ipx) on the right and sigma_l exp(-ikx) on the left.
Positions are absolute, the configurations are centred at the origin.

This script requires the following modules:
    * dataclasses
    * itertools
    * logging
    * multiprocessing
    * numpy
    * pandas
    * susy_data_model_delta_arrays
    * susy_data_oracle_delta_arrays
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * delta_step_amplitudes - single delta between two floors.
    * double_delta_amplitudes - two deltas around a quasi-square well.
    * triple_delta_amplitudes - three deltas and two quasi-square wells.
    * susy_map_amplitudes - sector 1 amplitudes from the sector 0 ones.
    * amplitudes_for - amplitudes of a configuration in a sector.
    * transmission_denominator - normalized denominator of the amplitudes.
    * s_matrix - S-matrix and eigenphases of a set of amplitudes.
    * unwrap_phases - removes the jumps of pi of a phase sequence.
    * double_equal_eigenvalues - closed form S-matrix eigenvalues.
    * double_equal_total_phase - closed form total phase shift.
    * alternating_triple_s_matrix - closed form S-matrix entries.
    * scattering_grid_frame - amplitudes on an energy grid as a DataFrame.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass, replace
from itertools import product as iprod
import logging
import multiprocessing as mp
from typing import Tuple

import numpy as np
import pandas as pd

import susy_data_model_delta_arrays
from susy_data_model_delta_arrays import (AlternatingArray, AlternatingComb,
                                          DeltaStep, DoubleEqual,
                                          DoubleUnequal, FreeParticle,
                                          TripleAlternating, TripleUnequal)
import susy_data_oracle_delta_arrays
import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyMapSingularError,
                                          SusyPartialSMatrixError,
                                          SusyPoleError,
                                          SusyUnsupportedConfigurationError)

logger = logging.getLogger(__name__)

GRID_COLUMNS = ['E', 'k_minus_re', 'k_minus_im', 'k_plus_re', 'k_plus_im',
                'sigma_r_re', 'sigma_r_im', 'rho_r_re', 'rho_r_im',
                'sigma_l_re', 'sigma_l_im', 'rho_l_re', 'rho_l_im',
                'flux_residual']

# -----------------------------------------------------------------------------


def _is_open(momentum):
    return abs(momentum.imag) == 0 and momentum.real > 0


@dataclass(frozen=True)
class ScatteringAmplitudes:
    """Right and left amplitudes with the momenta they were evaluated at."""

    sigma_r: complex
    rho_r: complex
    sigma_l: complex
    rho_l: complex
    k_minus: complex
    k_plus: complex
    energy: float
    sector: int = 0

    @property
    def left_open(self):
        return _is_open(self.k_minus)

    @property
    def right_open(self):
        return _is_open(self.k_plus)

    @property
    def is_open(self):
        return self.left_open and self.right_open

    @property
    def flux_residuals(self):
        """(right, left) flux defects of the open channels."""
        if self.is_open:
            ratio = (self.k_plus / self.k_minus).real
            right = ratio * abs(self.sigma_r) ** 2 + abs(self.rho_r) ** 2 - 1
            left = abs(self.sigma_l) ** 2 / ratio + abs(self.rho_l) ** 2 - 1
            return (right, left)
        if self.left_open:
            return (abs(self.rho_r) ** 2 - 1, np.nan)
        if self.right_open:
            return (np.nan, abs(self.rho_l) ** 2 - 1)
        return (np.nan, np.nan)

    @property
    def flux_residual(self):
        residuals = [abs(value) for value in self.flux_residuals
                     if not np.isnan(value)]
        return max(residuals) if residuals else np.nan


@dataclass(frozen=True)
class SMatrix:
    """Flux normalized 2x2 S-matrix, its eigenvalues and eigenphases."""

    entries: np.ndarray
    eigenvalues: Tuple[complex, complex]
    eigenphases: Tuple[float, float]

    @property
    def total_phase(self):
        return 0.5 * float(np.angle(np.linalg.det(self.entries)))

    @property
    def unitarity_defect(self):
        product = self.entries @ self.entries.conj().T
        return float(np.max(np.abs(product - np.eye(2))))

# -----------------------------------------------------------------------------


def _guard(denominator, scale, energy):
    """Raises SusyPoleError when the denominator vanishes."""

    if abs(denominator) <= SUSY_DEFAULTS.pole_guard * max(scale, 1e-300):
        raise SusyPoleError(f'scattering denominator vanishes at E = {energy}')


def delta_step_amplitudes(mu, floor_left, floor_right, energy, sector=0):
    """Amplitudes of a delta of strength (-1)^s mu at the origin between
    the floors floor_left (x < 0) and floor_right (x > 0).

    :param mu: strength of the delta.
    :param floor_left: floor of the left zone.
    :param floor_right: floor of the right zone.
    :param energy: real energy.
    :param sector: 0 or 1, the sector 1 flips the strength.
    :return: ScatteringAmplitudes.
    """

    k = susy_data_tools_delta_arrays.principal_momentum(energy, floor_left)
    p = susy_data_tools_delta_arrays.principal_momentum(energy, floor_right)
    strength = (-1) ** sector * mu

    denominator = k + p + 1j * strength
    _guard(denominator, abs(k) + abs(p) + abs(strength), energy)

    return ScatteringAmplitudes(
        sigma_r=2 * k / denominator,
        rho_r=(k - p - 1j * strength) / denominator,
        sigma_l=2 * p / denominator,
        rho_l=(p - k - 1j * strength) / denominator,
        k_minus=k, k_plus=p, energy=float(energy), sector=sector)

# -----------------------------------------------------------------------------


def _double_denominator(alpha, beta, a, k, q, p):
    """Denominator Delta of the two delta amplitudes and its scale."""

    phase = np.exp(4j * a * q)
    first = (k + q + 1j * alpha) * (p + q + 1j * beta)
    second = phase * (k - q + 1j * alpha) * (p - q + 1j * beta)

    return first - second, abs(first) + abs(second)


def _double_incoming_left(alpha, beta, a, k, q, p, energy):
    """(sigma, rho) for a wave coming from the side of the alpha delta."""

    delta, scale = _double_denominator(alpha, beta, a, k, q, p)
    _guard(delta, scale, energy)

    sigma = 4 * k * q * np.exp(-1j * a * (k + p - 2 * q)) / delta
    rho = np.exp(-2j * a * k) * (
        np.exp(4j * a * q) * (k + q - 1j * alpha) * (q - p - 1j * beta)
        + (k - q - 1j * alpha) * (p + q + 1j * beta)) / delta

    return sigma, rho


def double_delta_amplitudes(alpha, beta, a, floors, energy, sector=0):
    """Amplitudes of the deltas alpha at -a and beta at a.

    The zones x < -a, |x| < a and x > a have the given floors. The sector 1
    flips the signs of both strengths; the left amplitudes follow from the
    exchange of alpha with beta together with the outer floors.

    :param alpha: strength of the left delta.
    :param beta: strength of the right delta.
    :param a: half distance between the deltas.
    :param floors: (left, middle, right) floors.
    :param energy: real energy.
    :param sector: 0 or 1.
    :return: ScatteringAmplitudes.
    """

    sign = (-1) ** sector
    alpha, beta = sign * alpha, sign * beta
    k, q, p = (susy_data_tools_delta_arrays.principal_momentum(energy, floor)
               for floor in floors)

    sigma_r, rho_r = _double_incoming_left(alpha, beta, a, k, q, p, energy)
    sigma_l, rho_l = _double_incoming_left(beta, alpha, a, p, q, k, energy)

    return ScatteringAmplitudes(complex(sigma_r), complex(rho_r),
                                complex(sigma_l), complex(rho_l), k, p,
                                float(energy), sector)

# -----------------------------------------------------------------------------


def _triple_denominator(alpha, mu, beta, a, k, q, p):
    """Denominator of the three delta amplitudes and its scale."""

    p_plus = p + q + 1j * beta
    p_minus = q - p - 1j * beta
    first = (k + q + 1j * alpha) * (
        np.exp(-2j * q * a) * p_plus * (2 * q + 1j * mu)
        + 1j * mu * p_minus)
    second = (k - q + 1j * alpha) * (
        np.exp(2j * q * a) * p_minus * (2 * q - 1j * mu)
        - 1j * mu * p_plus)

    return first + second, abs(first) + abs(second)


def _triple_incoming_left(alpha, mu, beta, a, k, q, p, energy):
    """(sigma, rho) for a wave coming from the side of the alpha delta.

    The reflection is read off the interior solution propagated back from
    the transmitted wave.
    """

    denominator, scale = _triple_denominator(alpha, mu, beta, a, k, q, p)
    _guard(denominator, scale, energy)

    sigma = 8 * k * q ** 2 * np.exp(-1j * (k + p) * a) / denominator
    t = 8 * k * np.exp(-1j * k * a) / denominator
    p_plus = p + q + 1j * beta
    p_minus = q - p - 1j * beta
    # psi = C exp(iqx) + D exp(-iqx) on (0, a)
    c_coef = t * q * np.exp(-1j * q * a) * p_plus / 2
    d_coef = t * q * np.exp(1j * q * a) * p_minus / 2
    kick = 1j * mu * t * (np.exp(-1j * q * a) * p_plus
                          + np.exp(1j * q * a) * p_minus) / 4
    # psi = F exp(iqx) + G exp(-iqx) on (-a, 0)
    f_coef = c_coef + kick
    g_coef = d_coef - kick
    psi_left = f_coef * np.exp(-1j * q * a) + g_coef * np.exp(1j * q * a)
    rho = np.exp(-1j * k * a) * psi_left - np.exp(-2j * k * a)

    return sigma, rho


def triple_delta_amplitudes(alpha, mu, beta, a, energy, sector=0):
    """Amplitudes of the deltas alpha at -a, mu at 0 and beta at a.

    The floors are (alpha + mu/2)^2, mu^2/4, mu^2/4 and (beta + mu/2)^2,
    the squared slopes of the superpotential that generates the deltas. The
    sector 1 flips the three strengths, which leaves the floors unchanged.

    :param alpha: strength of the left delta.
    :param mu: strength of the central delta.
    :param beta: strength of the right delta.
    :param a: distance between consecutive deltas.
    :param energy: real energy.
    :param sector: 0 or 1.
    :return: ScatteringAmplitudes.
    """

    momentum = susy_data_tools_delta_arrays.principal_momentum
    k = momentum(energy, (alpha + mu / 2) ** 2)
    q = momentum(energy, mu ** 2 / 4)
    p = momentum(energy, (beta + mu / 2) ** 2)

    sign = (-1) ** sector
    alpha, mu, beta = sign * alpha, sign * mu, sign * beta

    sigma_r, rho_r = _triple_incoming_left(alpha, mu, beta, a, k, q, p,
                                           energy)
    sigma_l, rho_l = _triple_incoming_left(beta, mu, alpha, a, p, q, k,
                                           energy)

    return ScatteringAmplitudes(complex(sigma_r), complex(rho_r),
                                complex(sigma_l), complex(rho_l), k, p,
                                float(energy), sector)

# -----------------------------------------------------------------------------


def susy_map_amplitudes(amps0, v_minus, v_plus):
    """Sector 1 amplitudes obtained from the sector 0 ones.

    The maps are sigma_1^r = (ik_+ - v_+)/(ik_- + v_-) sigma_0^r,
    rho_1^r = -(ik_- - v_-)/(ik_- + v_-) rho_0^r and their mirror images
    sigma_1^l = (ik_- - v_-)/(ik_+ + v_+) sigma_0^l,
    rho_1^l = -(ik_+ - v_+)/(ik_+ + v_+) rho_0^l.

    :param amps0: ScatteringAmplitudes of the sector 0.
    :param v_minus: -W' on the left tail.
    :param v_plus: W' on the right tail.
    :return: ScatteringAmplitudes of the sector 1.
    """

    k_minus, k_plus = amps0.k_minus, amps0.k_plus
    left = 1j * k_minus + v_minus
    right = 1j * k_plus + v_plus
    tol = SUSY_DEFAULTS.pole_guard
    if abs(left) <= tol * (abs(k_minus) + abs(v_minus) + 1e-300):
        raise SusyMapSingularError(
            f'ik_- + v_- vanishes at E = {amps0.energy}')
    if abs(right) <= tol * (abs(k_plus) + abs(v_plus) + 1e-300):
        raise SusyMapSingularError(
            f'ik_+ + v_+ vanishes at E = {amps0.energy}')

    return replace(
        amps0,
        sigma_r=(1j * k_plus - v_plus) / left * amps0.sigma_r,
        rho_r=-(1j * k_minus - v_minus) / left * amps0.rho_r,
        sigma_l=(1j * k_minus - v_minus) / right * amps0.sigma_l,
        rho_l=-(1j * k_plus - v_plus) / right * amps0.rho_l,
        sector=1)

# -----------------------------------------------------------------------------


def amplitudes_for(kind, sector, energy):
    """Amplitudes of a configuration in a sector at a real energy.

    The closed forms are used for every finite configuration with one; the
    finite alternating array is evaluated with the transfer matrix.

    :param kind: ConfigKind.
    :param sector: 0 or 1.
    :param energy: real energy.
    :return: ScatteringAmplitudes.
    """

    if isinstance(kind, FreeParticle):
        return delta_step_amplitudes(0.0, 0.0, 0.0, energy, sector)

    if isinstance(kind, DeltaStep):
        slopes = susy_data_model_delta_arrays.build_superpotential(kind) \
            .slopes
        return delta_step_amplitudes(kind.mu, slopes[0] ** 2,
                                     slopes[-1] ** 2, energy, sector)

    if isinstance(kind, DoubleEqual):
        floors = (kind.alpha ** 2, 0.0, kind.alpha ** 2)
        return double_delta_amplitudes(kind.alpha, kind.alpha, kind.a,
                                       floors, energy, sector)

    if isinstance(kind, DoubleUnequal):
        floors = (kind.alpha ** 2, 0.0, kind.beta ** 2)
        return double_delta_amplitudes(kind.alpha, kind.beta, kind.a,
                                       floors, energy, sector)

    if isinstance(kind, TripleUnequal):
        return triple_delta_amplitudes(kind.alpha, kind.mu, kind.beta,
                                       kind.a, energy, sector)

    if isinstance(kind, TripleAlternating):
        alpha = kind.alpha
        return triple_delta_amplitudes(-alpha, alpha, -alpha, kind.a,
                                       energy, sector)

    if isinstance(kind, AlternatingArray):
        potential = susy_data_model_delta_arrays.potential_for(kind, sector)
        return susy_data_oracle_delta_arrays.oracle_amplitudes(
            potential, energy, sector)

    if isinstance(kind, AlternatingComb):
        raise SusyUnsupportedConfigurationError(
            'the infinite comb has bands, not scattering amplitudes')

    raise SusyUnsupportedConfigurationError(f'no amplitudes for {kind!r}')

# -----------------------------------------------------------------------------


def transmission_denominator(kind, sector, energy):
    """Denominator of the transmission amplitude divided by its scale.

    Below the outer floors the momenta are i kappa and the zeros of the
    denominator are the bound and anti-bound energies.

    :param kind: DeltaStep, DoubleEqual, DoubleUnequal, TripleUnequal or
     TripleAlternating.
    :param sector: 0 or 1.
    :param energy: real energy.
    :return: complex -- the normalized denominator.
    """

    momentum = susy_data_tools_delta_arrays.principal_momentum
    sign = (-1) ** sector

    if isinstance(kind, DeltaStep):
        slopes = susy_data_model_delta_arrays.build_superpotential(kind) \
            .slopes
        k = momentum(energy, slopes[0] ** 2)
        p = momentum(energy, slopes[-1] ** 2)
        value = k + p + 1j * sign * kind.mu
        return value / (abs(k) + abs(p) + abs(kind.mu))

    if isinstance(kind, (DoubleEqual, DoubleUnequal)):
        beta = kind.alpha if isinstance(kind, DoubleEqual) else kind.beta
        k = momentum(energy, kind.alpha ** 2)
        q = momentum(energy, 0.0)
        p = momentum(energy, beta ** 2)
        value, scale = _double_denominator(sign * kind.alpha, sign * beta,
                                           kind.a, k, q, p)
        return value / scale

    if isinstance(kind, (TripleUnequal, TripleAlternating)):
        if isinstance(kind, TripleUnequal):
            alpha, mu, beta = kind.alpha, kind.mu, kind.beta
        else:
            alpha, mu, beta = -kind.alpha, kind.alpha, -kind.alpha
        k = momentum(energy, (alpha + mu / 2) ** 2)
        q = momentum(energy, mu ** 2 / 4)
        p = momentum(energy, (beta + mu / 2) ** 2)
        value, scale = _triple_denominator(sign * alpha, sign * mu,
                                           sign * beta, kind.a, k, q, p)
        return value / scale

    raise SusyUnsupportedConfigurationError(
        f'no closed form denominator for {kind!r}')

# -----------------------------------------------------------------------------


def s_matrix(amps):
    """S-matrix of a set of amplitudes with both channels open.

    The transmissions are flux normalized,
    S = [[sqrt(k_+/k_-) sigma_r, rho_l], [rho_r, sqrt(k_-/k_+) sigma_l]],
    which is unitary also with different thresholds. The eigenphases are
    half the arguments of the eigenvalues.

    :param amps: ScatteringAmplitudes.
    :return: SMatrix.
    """

    if not amps.is_open:
        raise SusyPartialSMatrixError(
            f'closed channel at E = {amps.energy}, use the amplitudes')

    ratio = np.sqrt((amps.k_plus / amps.k_minus).real)
    entries = np.array([[ratio * amps.sigma_r, amps.rho_l],
                        [amps.rho_r, amps.sigma_l / ratio]], dtype=complex)

    half_sum = 0.5 * (entries[0, 0] + entries[1, 1])
    half_diff = 0.5 * (entries[0, 0] - entries[1, 1])
    root = np.sqrt(half_diff ** 2 + entries[0, 1] * entries[1, 0])
    eigenvalues = (complex(half_sum + root), complex(half_sum - root))
    eigenphases = tuple(0.5 * float(np.angle(value))
                        for value in eigenvalues)

    return SMatrix(entries, eigenvalues, eigenphases)

# -----------------------------------------------------------------------------


def unwrap_phases(phases):
    """Makes a sequence of phases defined modulo pi continuous.

    :param phases: sequence of phases sampled on a fine grid.
    :return: array -- phases shifted by multiples of pi.
    """

    phases = np.asarray(phases, dtype=float)
    if phases.size < 2:
        return phases.copy()

    jumps = np.round(np.diff(phases) / np.pi) * np.pi

    return phases - np.concatenate(([0.0], np.cumsum(jumps)))

# -----------------------------------------------------------------------------


def double_equal_eigenvalues(alpha, a, k, sector=0):
    """Closed form eigenvalues of the S-matrix of two equal deltas.

    The outer momentum is k, the inner one q = sqrt(k^2 + alpha^2). The
    first eigenvalue belongs to the even channel (sigma + rho), the second
    one to the odd channel (sigma - rho).

    :param alpha: strength of the deltas.
    :param a: half distance between the deltas.
    :param k: outer momentum, k > 0.
    :param sector: 0 or 1.
    :return: tuple -- (even eigenvalue, odd eigenvalue).
    """

    alpha = (-1) ** sector * alpha
    q = np.sqrt(k ** 2 + alpha ** 2)
    cos, sin = np.cos(q * a), np.sin(q * a)
    phase = np.exp(-2j * a * k)

    even = phase * ((k - 1j * alpha) * cos + 1j * q * sin) \
        / ((k + 1j * alpha) * cos - 1j * q * sin)
    odd = -phase * ((k - 1j * alpha) * sin - 1j * q * cos) \
        / ((k + 1j * alpha) * sin + 1j * q * cos)

    return complex(even), complex(odd)


def double_equal_total_phase(alpha, a, k, sector=0):
    """Total phase shift of two equal deltas, modulo pi.

    Half the argument of the determinant of the S-matrix,
    exp(-4iak) (alpha + ik)(q cos 2qa + ik sin 2qa)
    / ((k + i alpha)(k sin 2qa + iq cos 2qa)).

    :param alpha: strength of the deltas.
    :param a: half distance between the deltas.
    :param k: outer momentum, k > 0.
    :param sector: 0 or 1.
    :return: float -- the total phase shift in (-pi/2, pi/2].
    """

    alpha = (-1) ** sector * alpha
    q = np.sqrt(k ** 2 + alpha ** 2)
    cos, sin = np.cos(2 * q * a), np.sin(2 * q * a)
    determinant = np.exp(-4j * a * k) * (alpha + 1j * k) \
        * (q * cos + 1j * k * sin) \
        / ((k + 1j * alpha) * (k * sin + 1j * q * cos))

    return 0.5 * float(np.angle(determinant))

# -----------------------------------------------------------------------------


def alternating_triple_s_matrix(alpha, a, k, sector=0):
    """Closed form S-matrix of the alternating three deltas.

    The configuration is parity even, so the matrix is [[sigma, rho],
    [rho, sigma]] with k = sqrt(E - alpha^2/4) and
    sigma = 8ik^3 / D, rho = (-1)^(s+1) 2 alpha ((4k^2 + alpha^2) cos 2ka
    - alpha^2 - 2k^2) / D, D = (2ik + (-1)^s alpha)(4k^2
    + alpha^2 (exp(2ika) - 1)^2).

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param k: momentum, k > 0.
    :param sector: 0 or 1.
    :return: array -- 2x2 complex matrix.
    """

    sign = (-1) ** sector
    denominator = (2j * k + sign * alpha) \
        * (4 * k ** 2 + alpha ** 2 * (np.exp(2j * k * a) - 1) ** 2)
    sigma = 8j * k ** 3 / denominator
    rho = -sign * 2 * alpha * ((4 * k ** 2 + alpha ** 2) * np.cos(2 * k * a)
                               - alpha ** 2 - 2 * k ** 2) / denominator

    return np.array([[sigma, rho], [rho, sigma]], dtype=complex)

# -----------------------------------------------------------------------------


def _grid_row(kind, sector, energy):
    """One row of the scattering grid, NaN at a pole."""

    try:
        amps = amplitudes_for(kind, sector, energy)
    except SusyPoleError:
        logger.warning('Pole at E = %g, row left empty', energy)
        return [energy] + [np.nan] * (len(GRID_COLUMNS) - 1)

    row = [energy]
    for value in (amps.k_minus, amps.k_plus, amps.sigma_r, amps.rho_r,
                  amps.sigma_l, amps.rho_l):
        row.extend([value.real, value.imag])
    row.append(amps.flux_residual)

    return row


def scattering_grid_frame(kind, sector, energies, threads=1):
    """Amplitudes of a configuration on an energy grid.

    :param kind: ConfigKind.
    :param sector: 0 or 1.
    :param energies: sequence of real energies.
    :param threads: number of worker processes.
    :return: DataFrame -- one row per energy, GRID_COLUMNS as columns.
    """

    function_name = scattering_grid_frame.__name__
    susy_data_tools_delta_arrays \
        .susy_function_header_print_data(function_name, kind, sector)

    args_prod = iprod([kind], [sector], [float(e) for e in energies])
    if threads > 1:
        # Parallel computation of the rows, the order of the grid is kept
        with mp.Pool(processes=threads) as pool:
            rows = pool.starmap(_grid_row, args_prod)
    else:
        rows = [_grid_row(*args) for args in args_prod]

    return pd.DataFrame(rows, columns=GRID_COLUMNS)

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    amps = amplitudes_for(DoubleUnequal(2.0, 4.0, 7.0), 0, 17.0)
    logger.info('DoubleUnequal(2, 4, 7) at E = 17: sigma_r = %s, flux '
                'residual = %s', amps.sigma_r, amps.flux_residual)

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
