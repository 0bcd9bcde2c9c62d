'''SUSY delta arrays oracle module.

Independent brute force engine. The wave function and its derivative are
propagated across every zone of constant floor and kicked at every delta
(psi'(b+) - psi'(b-) = lambda psi(b)). From the resulting matrix the module
extracts the scattering amplitudes, the bound state energies and the
half trace of the monodromy of the alternating comb. The closed forms of the
other modules are checked against it.

This script requires the following modules:
    * dataclasses
    * logging
    * numpy
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * zone_propagator - (psi, psi') propagator across a zone.
    * delta_kick - (psi, psi') matrix of a delta.
    * plane_wave_basis - (psi, psi') of the plane waves at a point.
    * transfer_matrix - transfer matrix in the plane wave basis.
    * oracle_amplitudes - scattering amplitudes from the transfer matrix.
    * growing_coefficient - normalized coupling to the growing solution.
    * oracle_bound_states - bound state energies by shooting.
    * oracle_dispersion - half trace of the comb monodromy.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass
import logging

import numpy as np

import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyNoScatteringError)

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class TransferMatrix:
    """Transfer matrix between the plane wave amplitudes of the outer zones.

    (A_right, B_right) = entries @ (A_left, B_left) with
    psi = A exp(ikx) + B exp(-ikx) in absolute coordinates.
    """

    entries: np.ndarray
    energy: float
    k_minus: complex
    k_plus: complex

    @property
    def determinant(self):
        return complex(np.linalg.det(self.entries))

    @property
    def determinant_check(self):
        """|det - k_-/k_+|, zero for any real potential."""
        if self.k_plus == 0:
            return np.nan
        return abs(self.determinant - self.k_minus / self.k_plus)

# -----------------------------------------------------------------------------


def zone_propagator(ksq, length):
    """(psi, psi') propagator across a zone where psi'' = -ksq psi.

    Uses cos(k L) and sin(k L)/k, analytic at k = 0 and valid for negative
    or complex ksq.

    :param ksq: E - floor.
    :param length: width of the zone.
    :return: array -- 2x2 complex matrix.
    """

    k = np.sqrt(complex(ksq))
    cosine = np.cos(k * length)
    # sin(kL)/k = L sinc(kL/pi)
    sine_over_k = length * np.sinc(k * length / np.pi)

    return np.array([[cosine, sine_over_k],
                     [-ksq * sine_over_k, cosine]], dtype=complex)

# -----------------------------------------------------------------------------


def delta_kick(strength):
    """(psi, psi') matrix of a delta of the given strength.

    psi is continuous and psi' jumps by strength * psi.

    :param strength: strength lambda of the delta.
    :return: array -- 2x2 complex matrix.
    """

    return np.array([[1.0, 0.0], [strength, 1.0]], dtype=complex)

# -----------------------------------------------------------------------------


def plane_wave_basis(k, x):
    """(psi, psi') of exp(ikx) and exp(-ikx) at the point x, as columns.

    :param k: momentum of the zone.
    :param x: point.
    :return: array -- 2x2 complex matrix.
    """

    plus = np.exp(1j * k * x)
    minus = np.exp(-1j * k * x)

    return np.array([[plus, minus], [1j * k * plus, -1j * k * minus]],
                    dtype=complex)

# -----------------------------------------------------------------------------


def _interior_propagator(potential, energy):
    """Product of kicks and zone propagators from the first to the last
    boundary, both deltas included."""

    points = potential.zone_boundaries
    total = np.eye(2, dtype=complex)
    for i, point in enumerate(points):
        if i > 0:
            width = point - points[i - 1]
            if width <= 0:
                logger.warning('Zone of zero width at %g skipped', point)
                continue
            total = zone_propagator(energy - potential.floors[i],
                                    width) @ total
        total = delta_kick(potential.strength_at(point)) @ total

    return total

# -----------------------------------------------------------------------------


def transfer_matrix(potential, energy):
    """Transfer matrix of a potential at a real energy.

    The matrix composes the delta kicks and the zone propagators from left
    to right and converts the (psi, psi') representation to plane wave
    amplitudes of the outer zones. Evanescent zones use the principal branch
    of the momentum.

    :param potential: PotentialSpec.
    :param energy: real energy.
    :return: TransferMatrix.
    """

    k_minus = susy_data_tools_delta_arrays.principal_momentum(
        energy, potential.floors[0])
    k_plus = susy_data_tools_delta_arrays.principal_momentum(
        energy, potential.floors[-1])

    points = potential.zone_boundaries
    if not points:
        return TransferMatrix(np.eye(2, dtype=complex), energy, k_minus,
                              k_plus)

    inner = _interior_propagator(potential, energy)
    left = plane_wave_basis(k_minus, points[0])
    right = plane_wave_basis(k_plus, points[-1])
    entries = np.linalg.solve(right, inner @ left)

    return TransferMatrix(entries, energy, k_minus, k_plus)

# -----------------------------------------------------------------------------


def oracle_amplitudes(potential, energy, sector=0):
    """Scattering amplitudes extracted from the transfer matrix.

    :param potential: PotentialSpec with at least one open outer zone.
    :param energy: real energy.
    :param sector: sector tag stored in the result.
    :return: ScatteringAmplitudes.
    """

    # imported here, the scattering module imports this one
    from susy_data_scattering_delta_arrays import ScatteringAmplitudes

    matrix = transfer_matrix(potential, energy)
    k_minus, k_plus = matrix.k_minus, matrix.k_plus
    if k_minus.imag > 0 and k_plus.imag > 0:
        raise SusyNoScatteringError(
            f'both channels closed at E = {energy}')

    (t11, t12), (t21, t22) = matrix.entries
    rho_r = -t21 / t22
    sigma_r = matrix.determinant / t22
    sigma_l = 1 / t22
    rho_l = t12 / t22

    return ScatteringAmplitudes(complex(sigma_r), complex(rho_r),
                                complex(sigma_l), complex(rho_l),
                                k_minus, k_plus, float(energy), sector)

# -----------------------------------------------------------------------------


def growing_coefficient(potential, energy, left_exponent=None,
                        right_exponent=None):
    """Normalized coupling of the decaying left solution to the growing
    right solution.

    The state starts as exp(kappa_-(x - b_0)) on the left, is propagated to
    the last boundary with renormalization after every step, and the
    coefficient of exp(+kappa_+(x - b_N)) is returned divided by the norm of
    (psi, psi'). It vanishes at the bound state energies and keeps the sign
    of the unnormalized coefficient.

    :param potential: PotentialSpec.
    :param energy: real energy below both outer floors.
    :param left_exponent: kappa_-, default sqrt(floor_- - E).
    :param right_exponent: kappa_+, default sqrt(floor_+ - E).
    :return: float -- the coefficient.
    """

    if left_exponent is None:
        left_exponent = np.sqrt(max(potential.floors[0] - energy, 0.0))
    if right_exponent is None:
        right_exponent = np.sqrt(max(potential.floors[-1] - energy, 0.0))

    points = potential.zone_boundaries
    state = np.array([1.0, left_exponent])
    for i, point in enumerate(points):
        if i > 0:
            width = point - points[i - 1]
            if width > 0:
                step = zone_propagator(energy - potential.floors[i], width)
                state = (step @ state).real
        state = (delta_kick(potential.strength_at(point)) @ state).real
        state = state / np.hypot(*state)

    if right_exponent == 0:
        return float(state[1])

    return float((right_exponent * state[0] + state[1])
                 / (2 * right_exponent))

# -----------------------------------------------------------------------------


def oracle_bound_states(potential, window=None,
                        samples=SUSY_DEFAULTS.scan_samples):
    """Bound state energies of a potential by shooting.

    The energies are the zeros of growing_coefficient on a uniform scan of
    the window, refined by bracketing.

    :param potential: PotentialSpec.
    :param window: (E_lo, E_hi); default (0, min outer floor) when the outer
     floors are positive, otherwise a window below the lowest floor scaled
     with the delta strengths.
    :param samples: scan resolution.
    :return: list -- sorted energies.
    """

    margin = SUSY_DEFAULTS.window_margin
    outer = min(potential.floors[0], potential.floors[-1])
    if window is None:
        if outer > 0:
            window = (margin, outer - margin)
        else:
            scale = sum(abs(strength) for _, strength in potential.deltas)
            window = (min(potential.floors) - scale ** 2 - 1.0,
                      outer - margin)

    def residual(energies):
        energies = np.asarray(energies, dtype=float)
        values = [growing_coefficient(potential, energy)
                  for energy in energies.ravel()]
        return np.reshape(values, energies.shape)

    return susy_data_tools_delta_arrays.scan_roots(residual, window[0],
                                                   window[1], samples)

# -----------------------------------------------------------------------------


def oracle_dispersion(alpha, a, k, sector=0):
    """Half trace of the monodromy of the alternating comb over one period.

    The period [0, 2a) holds the delta (-1)^s alpha at 0 and -(-1)^s alpha
    at a. The half trace equals cos(2 q a).

    :param alpha: strength of the deltas.
    :param a: distance between consecutive deltas.
    :param k: momentum, k^2 = E - alpha^2 / 4.
    :param sector: 0 or 1.
    :return: float -- half trace.
    """

    sign = (-1) ** sector
    ksq = complex(k) ** 2
    cell = zone_propagator(ksq, a) @ delta_kick(-sign * alpha) \
        @ zone_propagator(ksq, a) @ delta_kick(sign * alpha)

    return float(0.5 * np.trace(cell).real)

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    logger.info('Monodromy half trace alpha=3, a=1, k=2: %s',
                oracle_dispersion(3.0, 1.0, 2.0))

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
