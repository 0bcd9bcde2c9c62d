'''SUSY delta arrays comb module.

The functions in the module solve the infinite alternating Dirac comb with
the deltas (-1)^s alpha (-1)^n at x = n a on top of the constant floor
alpha^2/4: the dispersion relation cos 2qa = g(k), the propagating bands,
the non-propagating band with its edges and critical width, the Bloch
states of the primitive cell [0, 2a] and the pair of zero modes.

This script requires the following modules:
    * dataclasses
    * logging
    * numpy
    * pandas
    * scipy
    * typing
    * susy_data_model_delta_arrays
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * dispersion_g - right member of the dispersion relation.
    * dispersion_g_hyperbolic - g(i kappa) in hyperbolic form.
    * propagating_bands - bands of real momentum up to k_max.
    * upper_edge_kappa - kappa of the upper edge of the non-propagating band.
    * nonpropagating_band - band of imaginary momentum.
    * curvature_mismatch - critical width diagnostic inside the band.
    * cell_matrix - 4x4 matching system of the primitive cell.
    * bloch_wavefunction - Bloch state of the primitive cell.
    * propagating_cell_coefficients - closed form cell coefficients.
    * comb_zero_modes - bosonic and fermionic zero modes of the comb.
    * g_curve_frame - g on a momentum grid as a DataFrame.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass
import logging
from typing import Optional, Tuple

import numpy as np
import pandas as pd
from scipy import optimize

import susy_data_model_delta_arrays
from susy_data_model_delta_arrays import AlternatingComb
import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyConfigurationError,
                                          SusyInvalidStateError)

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Band:
    """Band of the comb.

    k_range holds k for a propagating band and kappa for the non
    propagating one; edge_quasimomenta are the q of the two ends.
    """

    k_range: Tuple[float, float]
    energy_range: Tuple[float, float]
    propagating: bool
    edge_quasimomenta: Tuple[Optional[float], Optional[float]]

    def to_dict(self):
        return {'k_lo': self.k_range[0], 'k_hi': self.k_range[1],
                'E_lo': self.energy_range[0], 'E_hi': self.energy_range[1],
                'q_lo': self.edge_quasimomenta[0],
                'q_hi': self.edge_quasimomenta[1]}


@dataclass(frozen=True)
class NonPropagatingBand:
    """Band of imaginary momenta k = i kappa, 0 <= E < alpha^2/4.

    kappa_values[j] is the accepted (positive) root at q_values[j], NaN
    when there is none; rejected holds the (q, kappa) negative roots.
    """

    band: Optional[Band]
    q_values: Tuple[float, ...]
    kappa_values: Tuple[float, ...]
    rejected: Tuple[Tuple[float, float], ...]
    exists_upper_edge: bool
    upper_edge_kappa: Optional[float]
    a_critical: float

    def to_dict(self):
        data = {'exists_upper_edge': self.exists_upper_edge,
                'a_critical': self.a_critical,
                'kappa_upper_edge': self.upper_edge_kappa}
        if self.band is None:
            data.update({'kappa_min': None, 'kappa_max': None,
                         'E_lo': None, 'E_hi': None})
        else:
            data.update({'kappa_min': self.band.k_range[0],
                         'kappa_max': self.band.k_range[1],
                         'E_lo': self.band.energy_range[0],
                         'E_hi': self.band.energy_range[1]})
        return data


@dataclass(frozen=True)
class BlochState:
    """Bloch state of the comb built from the primitive cell [0, 2a].

    psi = A exp(ikx) + B exp(-ikx) on (0, a) and
    C exp(ikx) + D exp(-ikx) on (a, 2a), extended with
    psi(x + 2a) = exp(2iqa) psi(x).
    """

    q: float
    momentum: complex
    sector: int
    alpha: float
    a: float
    cell_coefficients: Tuple[complex, complex, complex, complex]

    def _cell(self, x):
        x = np.asarray(x, dtype=float)
        cells = np.floor(x / (2 * self.a))
        y = x - 2 * self.a * cells
        k = self.momentum
        coef_a, coef_b, coef_c, coef_d = self.cell_coefficients
        first = y < self.a
        plus, minus = np.exp(1j * k * y), np.exp(-1j * k * y)
        value = np.where(first, coef_a * plus + coef_b * minus,
                         coef_c * plus + coef_d * minus)
        slope = 1j * k * np.where(first, coef_a * plus - coef_b * minus,
                                  coef_c * plus - coef_d * minus)
        phase = np.exp(2j * self.q * self.a * cells)
        return phase * value, phase * slope

    def __call__(self, x):
        return self._cell(x)[0]

    def derivative(self, x):
        return self._cell(x)[1]

    def matching_residuals(self):
        """Residuals of the four matching equations of the cell."""
        matrix = cell_matrix(self.q, self.momentum, self.sector, self.alpha,
                             self.a)
        return np.abs(matrix @ np.asarray(self.cell_coefficients))

    def bloch_residual(self):
        """|psi(2a-) - exp(2iqa) psi(0+)|."""
        coef_a, coef_b, coef_c, coef_d = self.cell_coefficients
        u = np.exp(1j * self.momentum * self.a)
        phase = np.exp(2j * self.q * self.a)
        return float(abs(coef_c * u ** 2 + coef_d / u ** 2
                         - phase * (coef_a + coef_b)))


@dataclass(frozen=True)
class CombZeroModes:
    """exp(+W) and exp(-W) of the comb with their lattice values."""

    bosonic: susy_data_model_delta_arrays.ZeroMode
    fermionic: susy_data_model_delta_arrays.ZeroMode
    lattice_values: dict
    bloch_defects: Tuple[float, float]
    z0: int = 1
    z1: int = 1

    @property
    def index_contribution(self):
        return self.z0 - self.z1

    @property
    def susy_broken(self):
        return self.z0 + self.z1 == 0

# -----------------------------------------------------------------------------


def dispersion_g(k, alpha, a):
    """Right member of cos 2qa = ((4k^2 + alpha^2) cos 2ka - alpha^2)/(4k^2).

    Written as cos 2ka - (alpha^2 a^2 / 2) sinc^2(ka), analytic at k = 0
    where it equals 1 - a^2 alpha^2 / 2, and valid for k = i kappa.

    :param k: momentum or array of momenta, real or imaginary.
    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: float or array -- g(k).
    """

    k = np.asarray(k)
    sinc = np.sinc(k * a / np.pi)
    value = np.real(np.cos(2 * k * a) - 0.5 * (alpha * a) ** 2 * sinc ** 2)

    if value.ndim == 0:
        return float(value)

    return value


def dispersion_g_hyperbolic(kappa, alpha, a):
    """Dispersion function on the imaginary axis k = i kappa.

    g(i kappa) = ((4 kappa^2 - alpha^2) cosh 2 kappa a + alpha^2)
    / (4 kappa^2), real and even in kappa.

    :param kappa: nonzero real kappa or array of them.
    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: float or array -- g(i kappa).
    """

    kappa = np.asarray(kappa, dtype=float)
    value = ((4 * kappa ** 2 - alpha ** 2) * np.cosh(2 * kappa * a)
             + alpha ** 2) / (4 * kappa ** 2)

    if value.ndim == 0:
        return float(value)

    return value


def _edge_q(g, a):
    return float(np.arccos(np.clip(g, -1.0, 1.0)) / (2 * a))

# -----------------------------------------------------------------------------


def _refine_edge(alpha, a, inside, outside):
    """Band edge between an allowed and a forbidden momentum."""

    target = 1.0 if dispersion_g(outside, alpha, a) > 1 else -1.0
    return optimize.brentq(lambda k: dispersion_g(k, alpha, a) - target,
                           min(inside, outside), max(inside, outside),
                           xtol=1e-14, rtol=4 * np.finfo(float).eps)


def propagating_bands(alpha, a, k_max):
    """Propagating bands of the comb for 0 < k <= k_max.

    The momenta are scanned with the step min(pi/(20a), |alpha|/50); the
    allowed runs |g| <= 1 are refined to the edges g = +-1 by bracketing.
    The bands are the same in both sectors. A band cut by k_max ends at
    k_max.

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param k_max: largest momentum.
    :return: list -- Band objects ordered by momentum.
    """

    if k_max <= 0 or a <= 0:
        raise SusyConfigurationError('k_max and a must be positive')

    step = np.pi / (20 * a)
    if alpha != 0:
        step = min(step, abs(alpha) / 50)
    grid = np.append(np.arange(0.0, k_max, step), k_max)
    allowed = np.abs(dispersion_g(grid, alpha, a)) <= 1 + 1e-12

    bands = []
    idx = 0
    while idx < grid.size:
        if not allowed[idx]:
            idx += 1
            continue
        start = idx
        while idx + 1 < grid.size and allowed[idx + 1]:
            idx += 1
        end = idx
        k_lo = grid[start] if start == 0 \
            else _refine_edge(alpha, a, grid[start], grid[start - 1])
        k_hi = grid[end] if end == grid.size - 1 \
            else _refine_edge(alpha, a, grid[end], grid[end + 1])
        energies = (k_lo ** 2 + alpha ** 2 / 4, k_hi ** 2 + alpha ** 2 / 4)
        edges = (_edge_q(dispersion_g(k_lo, alpha, a), a),
                 _edge_q(dispersion_g(k_hi, alpha, a), a))
        bands.append(Band((float(k_lo), float(k_hi)), energies, True, edges))
        idx += 1

    return bands

# -----------------------------------------------------------------------------


def upper_edge_kappa(alpha, a):
    """Positive root of g(i kappa) = -1, the upper edge of the band.

    The root exists only above the critical width a_c = 2/|alpha|, where
    g(0) = 1 - a^2 alpha^2 / 2 < -1. At a = a_c the edge sits at kappa = 0.

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: float or None.
    """

    g_zero = 1 - (a * alpha) ** 2 / 2
    if abs(g_zero + 1) <= 4 * np.finfo(float).eps:
        return 0.0
    if g_zero > -1:
        return None

    return optimize.brentq(
        lambda kappa: dispersion_g(1j * kappa, alpha, a) + 1,
        0.0, abs(alpha) / 2, xtol=1e-14, rtol=4 * np.finfo(float).eps)


def nonpropagating_band(alpha, a, q_samples=SUSY_DEFAULTS.q_samples):
    """Non-propagating band of the comb.

    For every q of a uniform grid on [-pi/2a, pi/2a] the equation
    g(i kappa) = cos 2qa is solved on kappa in (0, |alpha|/2 + 5/a]. At
    q = 0 the roots are kappa = +-alpha/2 exactly; the negative roots
    follow from the kappa -> -kappa symmetry and are kept as rejected.

    :param alpha: strength of the deltas, nonzero.
    :param a: distance between consecutive deltas.
    :param q_samples: number of quasimomenta.
    :return: NonPropagatingBand.
    """

    if alpha == 0 or a <= 0:
        raise SusyConfigurationError('alpha must be nonzero and a positive')

    half = abs(alpha) / 2
    upper = half + 5 / a
    q_values = np.linspace(-np.pi / (2 * a), np.pi / (2 * a), q_samples)

    accepted, rejected = [], []
    for q in q_values:
        target = np.cos(2 * q * a)
        if q == 0 or np.isclose(target, 1.0, rtol=0, atol=1e-15):
            roots = [half]
        else:
            roots = susy_data_tools_delta_arrays.scan_roots(
                lambda kappa: dispersion_g(1j * np.asarray(kappa), alpha, a)
                - target, 1e-9, upper, samples=400)
        accepted.append(min(roots) if roots else np.nan)
        rejected.extend((float(q), -float(root)) for root in roots)

    edge = upper_edge_kappa(alpha, a)
    found = [value for value in accepted if np.isfinite(value)]
    if not found:
        band = None
    else:
        kappa_min = edge if edge is not None else 0.0
        kappa_max = max(found)
        band = Band((kappa_min, kappa_max),
                    (alpha ** 2 / 4 - kappa_max ** 2,
                     alpha ** 2 / 4 - kappa_min ** 2), False,
                    (0.0, np.pi / (2 * a) if edge is not None else None))

    return NonPropagatingBand(band, tuple(float(q) for q in q_values),
                              tuple(float(value) for value in accepted),
                              tuple(rejected), edge is not None, edge,
                              2 / abs(alpha))


def curvature_mismatch(alpha, a, q):
    """Mismatch 4 sin^2(aq) - alpha^2 a^2 of the curvatures of g(i kappa)
    and cos 2qa at kappa = 0.

    The mismatch vanishes at the critical width of q; at q = pi/2a that
    width is a_c = 2/|alpha|.

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param q: quasimomentum.
    :return: float -- the mismatch.
    """

    return 4 * np.sin(a * q) ** 2 - (alpha * a) ** 2

# -----------------------------------------------------------------------------


def cell_matrix(q, momentum, sector, alpha, a):
    """4x4 matching system of the primitive cell for (A, B, C, D).

    Continuity and derivative jump at x = a, where the delta is
    -(-1)^s alpha, and at x = 2a, where it is (-1)^s alpha and the Bloch
    condition links the cell to the next one.

    :param q: quasimomentum.
    :param momentum: real k or imaginary i kappa.
    :param sector: 0 or 1.
    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: array -- 4x4 complex matrix, singular on the dispersion curve.
    """

    k = complex(momentum)
    u = np.exp(1j * k * a)
    w = np.exp(2j * q * a)
    sign = (-1) ** sector
    jump_a = -sign * alpha
    jump_2a = sign * alpha

    return np.array([
        [u, 1 / u, -u, -1 / u],
        [-1j * k * u - jump_a * u, 1j * k / u - jump_a / u,
         1j * k * u, -1j * k / u],
        [w, w, -u ** 2, -1 / u ** 2],
        [1j * k * w, -1j * k * w,
         -1j * k * u ** 2 - jump_2a * u ** 2,
         1j * k / u ** 2 - jump_2a / u ** 2]], dtype=complex)


def bloch_wavefunction(q, momentum, sector, alpha, a):
    """Bloch state of the comb for a pair (q, k) on the dispersion curve.

    The coefficients are the null vector of the cell system normalized to
    A = 1.

    :param q: quasimomentum in [-pi/2a, pi/2a].
    :param momentum: real k or imaginary i kappa.
    :param sector: 0 or 1.
    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: BlochState.
    """

    g_value = dispersion_g(complex(momentum), alpha, a)
    mismatch = abs(g_value - np.cos(2 * q * a))
    if mismatch > SUSY_DEFAULTS.match_tol * max(1.0, abs(g_value)):
        raise SusyInvalidStateError(
            f'(q, k) = ({q}, {momentum}) is off the dispersion curve by '
            f'{mismatch:.3g}')

    matrix = cell_matrix(q, momentum, sector, alpha, a)
    rest, *_ = np.linalg.lstsq(matrix[:, 1:], -matrix[:, 0], rcond=None)
    coefficients = (1.0 + 0j, *(complex(value) for value in rest))

    return BlochState(float(q), complex(momentum), sector, alpha, a,
                      coefficients)


def propagating_cell_coefficients(q, k, alpha, a, sector=0):
    """Closed form (A, B, C, D) of a propagating Bloch state with A = 1.

    With lam = -(-1)^s alpha, the strength at x = a, and
    N = i lam (exp(2iak) - 1) - 2k + 2k exp(2ia(k + q)). When N vanishes
    (q = -k modulo the zone) q is moved by 1e-12.

    :param q: quasimomentum.
    :param k: real momentum on the dispersion curve.
    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param sector: 0 or 1.
    :return: tuple -- (A, B, C, D).
    """

    lam = -(-1) ** sector * alpha
    u2 = np.exp(2j * a * k)
    norm = 1j * lam * (u2 - 1) - 2 * k + 2 * k * u2 * np.exp(2j * a * q)
    if abs(norm) < 1e-14 * max(1.0, abs(k), abs(lam)):
        q = q + 1e-12
        norm = 1j * lam * (u2 - 1) - 2 * k + 2 * k * u2 * np.exp(2j * a * q)
    w = np.exp(2j * a * q)

    coef_b = ((2 * k - 1j * lam) * u2 ** 2 - 2 * k * u2 * w
              + 1j * lam * u2) / norm
    coef_c = ((2 * k - 1j * lam) * u2 * w + 1j * lam * w - 2 * k) / norm
    coef_d = (1j * lam * u2 ** 2 * w - (2 * k + 1j * lam) * u2 * w
              + 2 * k * u2 ** 2) / norm

    return (1.0 + 0j, complex(coef_b), complex(coef_c), complex(coef_d))

# -----------------------------------------------------------------------------


def comb_zero_modes(alpha, a):
    """Zero modes exp(+W) and exp(-W) of the comb.

    Neither is normalizable but both satisfy the Bloch condition with
    q = 0, so there is one zero mode per sector, supersymmetry is unbroken
    and the zero modes do not contribute to the Witten index.

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :return: CombZeroModes.
    """

    superpotential = susy_data_model_delta_arrays.build_superpotential(
        AlternatingComb(alpha, a))
    bosonic = susy_data_model_delta_arrays.zero_mode(superpotential, 0)
    fermionic = susy_data_model_delta_arrays.zero_mode(superpotential, 1)

    values = {'psi0_even_sites': float(bosonic(0.0)),
              'psi0_odd_sites': float(bosonic(a)),
              'psi1_even_sites': float(fermionic(0.0)),
              'psi1_odd_sites': float(fermionic(a))}
    defects = (float(abs(bosonic(2 * a) - bosonic(0.0))),
               float(abs(fermionic(2 * a) - fermionic(0.0))))

    return CombZeroModes(bosonic, fermionic, values, defects)

# -----------------------------------------------------------------------------


def g_curve_frame(alpha, a, upper, samples=1000, imaginary=False):
    """g on a uniform momentum grid.

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param upper: largest k (or kappa).
    :param samples: number of grid points.
    :param imaginary: True for the curve g(i kappa).
    :return: DataFrame -- columns k (or kappa) and g.
    """

    grid = np.linspace(0.0, upper, samples)
    if imaginary:
        return pd.DataFrame({'kappa': grid,
                             'g': dispersion_g(1j * grid, alpha, a)})

    return pd.DataFrame({'k': grid, 'g': dispersion_g(grid, alpha, a)})

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    bands = propagating_bands(3.0, 1.0, 14.0)
    logger.info('Propagating bands for alpha=3, a=1: %d', len(bands))
    logger.info('Non-propagating band: %s',
                nonpropagating_band(3.0, 1.0).to_dict())

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
