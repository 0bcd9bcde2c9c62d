'''SUSY delta arrays spectra module.

The functions in the module locate the bound and anti-bound states of the
delta configurations as real roots of their spectral equations, classify
them, build the piecewise wave functions with their normalization and check
the supersymmetric pairing of the two sectors together with the
intertwining of the bound states by the first order operator d/dx - W'.

A wave function is stored as the value and the derivative at every delta,
so inside a zone of floor f it is psi(b) cos(k t) + psi'(b) sin(k t) / k
with k^2 = E - f and t the distance to the left boundary of the zone; the
tails are pure exponentials.

This script requires the following modules:
    * dataclasses
    * logging
    * numpy
    * typing
    * susy_data_model_delta_arrays
    * susy_data_oracle_delta_arrays
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * nonsusy_potential - potential of the configurations without the wells.
    * spectral_residuals - spectral equations of a configuration.
    * shoot_wavefunction - piecewise wave function started at the left.
    * build_wavefunction - wave function of a state with its normalization.
    * find_bound_states - bound (and optionally anti-bound) states.
    * classify_delta_step_pole - pole of the delta step amplitudes.
    * double_equal_norm_constant - closed form normalization.
    * susy_pairing_report - pairing of the sectors and intertwining check.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass, field, replace
import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

import susy_data_model_delta_arrays
from susy_data_model_delta_arrays import (AlternatingArray, AlternatingComb,
                                          DeltaStep, DoubleEqual,
                                          DoubleUnequal, FreeParticle,
                                          PotentialSpec, TripleAlternating,
                                          TripleUnequal)
import susy_data_oracle_delta_arrays
import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyConfigurationError,
                                          SusyInconsistencyError,
                                          SusyUnsupportedConfigurationError)

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class SpectralEquation:
    """Real residual whose sign changes bracket the state energies."""

    residual: Callable
    domain: Tuple[float, float]
    label: str
    parity: Optional[str] = None


def _classify(exponents, band=SUSY_DEFAULTS.threshold_band):
    if any(abs(value) <= band for value in exponents):
        return 'threshold'
    if all(value > band for value in exponents):
        return 'bound'
    return 'anti_bound'


def _propagator_entries(ksq, t):
    """cos(k t) and sin(k t)/k, real valued for real ksq of any sign."""

    k = np.sqrt(np.asarray(ksq, dtype=complex))
    cosine = np.cos(k * t).real
    sine_over_k = (t * np.sinc(k * t / np.pi)).real

    return cosine, sine_over_k


def _zone_integrals(ksq, length):
    """Integrals of cos^2, sin cos / k and sin^2 / k^2 over a zone."""

    k = np.sqrt(complex(ksq))
    if abs(k) * length < 1e-3:
        cc = length - ksq * length ** 3 / 3
        cs = length ** 2 / 2 - ksq * length ** 4 / 6
        ss = length ** 3 / 3 - ksq * length ** 5 / 15
        return cc, cs, ss

    sin_two = np.sin(2 * k * length) / (4 * k)
    cc = (length / 2 + sin_two).real
    cs = (np.sin(k * length) ** 2 / (2 * k ** 2)).real
    ss = ((length / 2 - sin_two) / k ** 2).real

    return cc, cs, ss


@dataclass(frozen=True)
class PiecewiseWavefunction:
    """Piecewise elementary wave function of a state.

    before[i] and after[i] are (psi, psi') at the breakpoint i on the left
    and on the right of its delta. The left tail is
    psi(b_0) exp(left_exponent (x - b_0)) and the right tail
    psi(b_N) exp(-right_exponent (x - b_N)). Every value is multiplied by
    scale.
    """

    breakpoints: Tuple[float, ...]
    floors: Tuple[float, ...]
    strengths: Tuple[float, ...]
    energy: float
    left_exponent: float
    right_exponent: float
    before: Tuple[Tuple[float, float], ...]
    after: Tuple[Tuple[float, float], ...]
    scale: float = 1.0
    state_kind: str = 'bound'

    def _zone_of(self, x):
        return np.searchsorted(np.asarray(self.breakpoints), x, side='right')

    def _zone_eval(self, zone, x):
        """(psi, psi') of the formula of a zone, also outside of it."""
        points = self.breakpoints
        last = len(points)
        x = np.asarray(x, dtype=float)
        if zone == 0:
            value = self.before[0][0] * np.exp(self.left_exponent
                                               * (x - points[0]))
            return value, self.left_exponent * value
        if zone == last:
            value = self.after[-1][0] * np.exp(-self.right_exponent
                                               * (x - points[-1]))
            return value, -self.right_exponent * value
        u, w = self.after[zone - 1]
        ksq = self.energy - self.floors[zone]
        t = x - points[zone - 1]
        cosine, sine_over_k = _propagator_entries(ksq, t)
        return u * cosine + w * sine_over_k, -ksq * u * sine_over_k \
            + w * cosine

    def _evaluate(self, x, column):
        shape = np.shape(x)
        x = np.atleast_1d(np.asarray(x, dtype=float))
        zones = self._zone_of(x)
        out = np.zeros_like(x)
        for zone in np.unique(zones):
            mask = zones == zone
            out[mask] = self._zone_eval(int(zone), x[mask])[column]
        return self.scale * out.reshape(shape)

    def __call__(self, x):
        return self._evaluate(x, 0)

    def derivative(self, x):
        return self._evaluate(x, 1)

    def continuity_residuals(self):
        """|psi(b-) - psi(b+)| at every breakpoint."""
        residuals = []
        for i, point in enumerate(self.breakpoints):
            left = self._zone_eval(i, point)[0]
            right = self._zone_eval(i + 1, point)[0]
            residuals.append(self.scale * abs(float(left - right)))
        return residuals

    def jump_residuals(self):
        """|psi'(b+) - psi'(b-) - lambda psi(b)| at every breakpoint."""
        residuals = []
        for i, point in enumerate(self.breakpoints):
            value, left = self._zone_eval(i, point)
            right = self._zone_eval(i + 1, point)[1]
            jump = float(right - left - self.strengths[i] * value)
            residuals.append(self.scale * abs(jump))
        return residuals

    def matching_residual(self):
        """Largest continuity or jump residual relative to the size of the
        state at the breakpoints.

        The right tail is a pure exponential, so a candidate energy that
        is not an eigenvalue shows up as a jump residual at the last
        breakpoint.

        :return: float -- the relative residual.
        """
        size = max(max(abs(value), abs(slope))
                   for value, slope in self.before + self.after)
        worst = max(self.continuity_residuals() + self.jump_residuals())
        return worst / max(abs(self.scale) * size, 1e-300)

    def norm_squared(self):
        """Integral of psi^2 over the line, closed form per zone."""
        if self.left_exponent <= 0 or self.right_exponent <= 0:
            return np.inf
        total = self.before[0][0] ** 2 / (2 * self.left_exponent)
        total += self.after[-1][0] ** 2 / (2 * self.right_exponent)
        points = self.breakpoints
        for zone in range(1, len(points)):
            u, w = self.after[zone - 1]
            cc, cs, ss = _zone_integrals(self.energy - self.floors[zone],
                                         points[zone] - points[zone - 1])
            total += u ** 2 * cc + 2 * u * w * cs + w ** 2 * ss
        return self.scale ** 2 * total

    def normalized(self):
        norm = self.norm_squared()
        if not np.isfinite(norm):
            raise SusyConfigurationError(
                f'state at E = {self.energy} is not normalizable')
        return replace(self, scale=self.scale / np.sqrt(norm))


@dataclass(frozen=True)
class BoundState:
    """Bound, anti-bound or threshold state of a sector."""

    energy: float
    decay_constants: Dict[str, float]
    inner_momentum: Optional[float]
    parity: Optional[str]
    sector: int
    kind: str
    wavefunction: Optional[PiecewiseWavefunction] = field(default=None,
                                                          repr=False)
    label: str = ''

    def to_dict(self):
        return {'energy': self.energy, 'kind': self.kind,
                'parity': self.parity, 'sector': self.sector,
                'kappa': dict(self.decay_constants),
                'q': self.inner_momentum, 'equation': self.label}


@dataclass(frozen=True)
class DeltaStepPole:
    """Pole of the delta step amplitudes on the imaginary momentum axis."""

    energy: float
    kappa_left: float
    kappa_right: float
    kind: str


@dataclass(frozen=True)
class PairingReport:
    """States of both sectors, their pairs and the singlets.

    pairs holds indices into states; intertwining holds the relative
    residual of every pair.
    """

    states: List[BoundState]
    pairs: List[Tuple[int, int]]
    singlets: List[int]
    intertwining: List[float]

    def to_dict(self):
        return {'states': [state.to_dict() for state in self.states],
                'pairs': [list(pair) for pair in self.pairs],
                'singlets': list(self.singlets),
                'intertwining_residuals': list(self.intertwining)}

# -----------------------------------------------------------------------------


def nonsusy_potential(kind):
    """Potential of a configuration without the quasi-square wells.

    DeltaStep: delta mu at 0 and step g on the right; DoubleEqual and
    DoubleUnequal: the two deltas with zero floors.

    :param kind: DeltaStep, DoubleEqual or DoubleUnequal.
    :return: PotentialSpec.
    """

    if isinstance(kind, DeltaStep):
        return PotentialSpec((0.0,), (0.0, kind.g), ((0.0, kind.mu),))
    if isinstance(kind, (DoubleEqual, DoubleUnequal)):
        beta = kind.alpha if isinstance(kind, DoubleEqual) else kind.beta
        a = kind.a
        return PotentialSpec((-a, a), (0.0, 0.0, 0.0),
                             ((-a, kind.alpha), (a, beta)))

    raise SusyUnsupportedConfigurationError(
        f'no non supersymmetric variant of {kind!r}')


def _potential(kind, sector, susy):
    if susy:
        return susy_data_model_delta_arrays.potential_for(kind, sector)
    return nonsusy_potential(kind)

# -----------------------------------------------------------------------------


def _root(values):
    return np.sqrt(np.maximum(values, 0.0))


def _susy_equations(kind, sector):
    """Spectral equations of the supersymmetric configurations."""

    sign = (-1) ** sector
    margin = SUSY_DEFAULTS.window_margin

    if isinstance(kind, DeltaStep):
        slopes = susy_data_model_delta_arrays.build_superpotential(kind) \
            .slopes
        f_left, f_right = slopes[0] ** 2, slopes[-1] ** 2
        mu_s = sign * kind.mu

        def residual(energy):
            energy = np.asarray(energy, dtype=float)
            return _root(f_left - energy) + _root(f_right - energy) + mu_s

        return [SpectralEquation(residual,
                                 (margin, min(f_left, f_right) - margin),
                                 'delta_step_pole')]

    if isinstance(kind, DoubleEqual):
        alpha, a = kind.alpha, kind.a
        alpha_s = sign * alpha
        domain = (margin, alpha ** 2 - margin)

        def even(energy):
            energy = np.asarray(energy, dtype=float)
            q, kappa = _root(energy), _root(alpha ** 2 - energy)
            return q * np.sin(q * a) - (kappa + alpha_s) * np.cos(q * a)

        def odd(energy):
            energy = np.asarray(energy, dtype=float)
            q, kappa = _root(energy), _root(alpha ** 2 - energy)
            return q * np.cos(q * a) + (kappa + alpha_s) * np.sin(q * a)

        return [SpectralEquation(even, domain, 'double_equal_even', 'even'),
                SpectralEquation(odd, domain, 'double_equal_odd', 'odd')]

    if isinstance(kind, DoubleUnequal):
        alpha, beta, a = kind.alpha, kind.beta, kind.a

        def residual(energy):
            energy = np.asarray(energy, dtype=float)
            q = _root(energy)
            big_a = _root(alpha ** 2 - energy) + sign * alpha
            big_b = _root(beta ** 2 - energy) + sign * beta
            return q * (big_a + big_b) * np.cos(2 * q * a) \
                - (q ** 2 - big_a * big_b) * np.sin(2 * q * a)

        domain = (margin, min(alpha ** 2, beta ** 2) - margin)
        return [SpectralEquation(residual, domain, 'double_unequal')]

    if isinstance(kind, TripleUnequal):
        alpha, mu, beta, a = kind.alpha, kind.mu, kind.beta, kind.a
        f_left, f_right = (alpha + mu / 2) ** 2, (beta + mu / 2) ** 2
        mu_s = sign * mu

        # the determinant carries a factor q^2, divided out so that the
        # inner threshold E = mu^2/4 is not a root
        def residual(energy):
            energy = np.asarray(energy, dtype=float)
            qsq = energy - mu ** 2 / 4
            cosine, sine_over_q = _propagator_entries(qsq, 2 * a)
            _, half_sine_over_q = _propagator_entries(qsq, a)
            big_a = _root(f_left - energy) + sign * alpha
            big_b = _root(f_right - energy) + sign * beta
            product = qsq - big_a * big_b
            return mu_s * (1 + cosine
                           + 2 * big_a * big_b * half_sine_over_q ** 2) \
                + 2 * (big_a + big_b) * cosine \
                + (mu_s * (big_a + big_b) - 2 * product) * sine_over_q

        domain = (margin, min(f_left, f_right) - margin)
        return [SpectralEquation(residual, domain, 'triple_unequal')]

    if isinstance(kind, TripleAlternating):
        alpha, a = kind.alpha, kind.a

        def residual(energy):
            energy = np.asarray(energy, dtype=float)
            kappa = _root(alpha ** 2 / 4 - energy)
            decay = np.exp(-2 * a * kappa)
            return (2 * kappa - sign * alpha) \
                * (2 * kappa + alpha - alpha * decay) \
                * (2 * kappa - alpha + alpha * decay)

        domain = (margin, alpha ** 2 / 4 - margin)
        return [SpectralEquation(residual, domain, 'triple_alternating')]

    if isinstance(kind, AlternatingArray):
        potential = susy_data_model_delta_arrays.potential_for(kind, sector)
        residual = np.vectorize(
            lambda energy: susy_data_oracle_delta_arrays.growing_coefficient(
                potential, energy))
        domain = (margin, kind.alpha ** 2 / 4 - margin)
        return [SpectralEquation(residual, domain,
                                 'alternating_array_shooting')]

    if isinstance(kind, FreeParticle):
        return []

    raise SusyUnsupportedConfigurationError(
        f'{kind.name} has bands, use the comb module')


def _nonsusy_equations(kind):
    """Spectral equations of the configurations without the wells."""

    margin = SUSY_DEFAULTS.window_margin

    if isinstance(kind, DeltaStep):
        mu, g = kind.mu, kind.g

        def residual(energy):
            energy = np.asarray(energy, dtype=float)
            return _root(-energy) + _root(g - energy) + mu

        lower = min(0.0, g) - mu ** 2 - abs(g) - 1.0
        return [SpectralEquation(residual, (lower, min(0.0, g) - margin),
                                 'delta_step_pole')]

    if isinstance(kind, DoubleEqual):
        alpha, a = kind.alpha, kind.a
        domain = (-4 * alpha ** 2 - 1.0, -margin)

        def even(energy):
            kappa = _root(-np.asarray(energy, dtype=float))
            return 2 * kappa + alpha + alpha * np.exp(-2 * a * kappa)

        def odd(energy):
            kappa = _root(-np.asarray(energy, dtype=float))
            return 2 * kappa + alpha - alpha * np.exp(-2 * a * kappa)

        return [SpectralEquation(even, domain, 'two_delta_even', 'even'),
                SpectralEquation(odd, domain, 'two_delta_odd', 'odd')]

    if isinstance(kind, DoubleUnequal):
        alpha, beta, a = kind.alpha, kind.beta, kind.a

        def residual(energy):
            kappa = _root(-np.asarray(energy, dtype=float))
            return (2 * kappa + alpha) * (2 * kappa + beta) \
                - alpha * beta * np.exp(-4 * a * kappa)

        domain = (-(abs(alpha) + abs(beta)) ** 2 - 1.0, -margin)
        return [SpectralEquation(residual, domain, 'two_delta')]

    raise SusyUnsupportedConfigurationError(
        f'no non supersymmetric variant of {kind!r}')


def spectral_residuals(kind, sector, susy=True):
    """Spectral equations of a configuration in a sector.

    The residuals are real functions of the energy, continuous on their
    domain, whose roots are the bound state energies. DoubleEqual gives an
    even and an odd equation. The finite alternating array is solved by
    shooting.

    :param kind: ConfigKind.
    :param sector: 0 or 1.
    :param susy: False for the configurations without the wells.
    :return: list -- SpectralEquation objects.
    """

    if isinstance(kind, AlternatingComb):
        raise SusyUnsupportedConfigurationError(
            'the comb has bands, use the comb module')

    if susy:
        return _susy_equations(kind, sector)

    return _nonsusy_equations(kind)

# -----------------------------------------------------------------------------


def shoot_wavefunction(potential, energy, left_exponent, right_exponent):
    """Wave function started as exp(left_exponent (x - b_0)) at the left.

    :param potential: PotentialSpec with at least one breakpoint.
    :param energy: real energy.
    :param left_exponent: decay constant of the left tail.
    :param right_exponent: decay constant of the right tail.
    :return: PiecewiseWavefunction -- not normalized.
    """

    points = potential.zone_boundaries
    if not points:
        raise SusyConfigurationError('no breakpoints, no bound states')

    strengths = tuple(potential.strength_at(point) for point in points)
    state = np.array([1.0, float(left_exponent)])
    before, after = [], []
    for i, point in enumerate(points):
        if i > 0:
            step = susy_data_oracle_delta_arrays.zone_propagator(
                energy - potential.floors[i], point - points[i - 1])
            state = (step @ state).real
        before.append((float(state[0]), float(state[1])))
        state = (susy_data_oracle_delta_arrays.delta_kick(strengths[i])
                 @ state).real
        after.append((float(state[0]), float(state[1])))

    return PiecewiseWavefunction(tuple(points), tuple(potential.floors),
                                 strengths, float(energy),
                                 float(left_exponent), float(right_exponent),
                                 tuple(before), tuple(after))


def build_wavefunction(energy, kind, sector, susy=True, left_exponent=None,
                       right_exponent=None):
    """Wave function of a state with its normalization.

    The decay constants default to sqrt(floor - E) of the outer zones; a
    negative constant describes an anti-bound state, which is returned
    unnormalized with state_kind 'anti_bound'.

    :param energy: verified root of a spectral equation.
    :param kind: ConfigKind.
    :param sector: 0 or 1.
    :param susy: False for the configurations without the wells.
    :param left_exponent: signed decay constant of the left tail.
    :param right_exponent: signed decay constant of the right tail.
    :return: PiecewiseWavefunction.
    """

    potential = _potential(kind, sector, susy)
    if left_exponent is None:
        left_exponent = float(np.sqrt(max(potential.floors[0] - energy,
                                          0.0)))
    if right_exponent is None:
        right_exponent = float(np.sqrt(max(potential.floors[-1] - energy,
                                           0.0)))

    wavefunction = shoot_wavefunction(potential, energy, left_exponent,
                                      right_exponent)
    state_kind = _classify((left_exponent, right_exponent))
    if state_kind != 'bound':
        return replace(wavefunction, state_kind=state_kind)

    return wavefunction.normalized()

# -----------------------------------------------------------------------------


def _inner_momentum(potential, energy):
    inner = potential.floors[1:-1]
    if not inner:
        return None
    floor = min(inner)
    if energy < floor:
        return None
    return float(np.sqrt(energy - floor))


def _parity(kind, wavefunction):
    """Parity of a state of a parity even configuration, None otherwise."""

    if not kind.symmetric or wavefunction is None:
        return None
    reach = wavefunction.breakpoints[-1] + 1.0 / max(
        abs(wavefunction.right_exponent), 1e-3)
    x = np.linspace(reach / 200, reach, 200)
    right = wavefunction(x)
    left = wavefunction(-x)
    idx = int(np.argmax(np.abs(right)))
    return 'even' if right[idx] * left[idx] > 0 else 'odd'


def _zero_energy_states(kind, sector, anti_bound):
    """Zero modes exp(+-W) classified by their tails."""

    superpotential = susy_data_model_delta_arrays.build_superpotential(kind)
    if not superpotential.breakpoints:
        return []

    mode = susy_data_model_delta_arrays.zero_mode(superpotential, sector)
    sign = mode.exponent_sign
    left = sign * superpotential.slopes[0]
    right = -sign * superpotential.slopes[-1]
    state_kind = 'bound' if mode.normalizable else _classify((left, right))
    if state_kind != 'bound' and not anti_bound:
        return []

    wavefunction = build_wavefunction(0.0, kind, sector, True, left, right)
    potential = susy_data_model_delta_arrays.potential_for(kind, sector)

    return [BoundState(0.0, {'left': left, 'right': right},
                       _inner_momentum(potential, 0.0),
                       _parity(kind, wavefunction), sector, state_kind,
                       wavefunction, 'zero_mode')]


def find_bound_states(kind, sector, susy=True, anti_bound=False,
                      samples=SUSY_DEFAULTS.scan_samples):
    """Bound states of a configuration in a sector, sorted by energy.

    The positive energies are the roots of the spectral equations inside
    (0, min outer floor); the zero energy candidates are the zero modes of
    the model module, bound when normalizable and reported as anti-bound
    (or threshold) states only on request. A root whose wave function
    misses the matching conditions by more than state_tol is dropped.

    :param kind: ConfigKind.
    :param sector: 0 or 1.
    :param susy: False for the configurations without the wells.
    :param anti_bound: also report the non normalizable zero modes.
    :param samples: scan resolution of every spectral equation.
    :return: list -- BoundState objects.
    """

    function_name = find_bound_states.__name__
    susy_data_tools_delta_arrays \
        .susy_function_header_print_data(function_name, kind, sector)

    potential = None
    states = []
    for equation in spectral_residuals(kind, sector, susy):
        if potential is None:
            potential = _potential(kind, sector, susy)
        roots = susy_data_tools_delta_arrays.scan_roots(
            equation.residual, *equation.domain, samples=samples)
        for energy in roots:
            wavefunction = build_wavefunction(energy, kind, sector, susy)
            mismatch = wavefunction.matching_residual()
            if mismatch > SUSY_DEFAULTS.state_tol:
                logger.warning('Root E = %.12g of %s rejected, matching '
                               'residual %.3g', energy, equation.label,
                               mismatch)
                continue
            decay = {'left': wavefunction.left_exponent,
                     'right': wavefunction.right_exponent}
            parity = equation.parity or _parity(kind, wavefunction)
            states.append(BoundState(
                float(energy), decay, _inner_momentum(potential, energy),
                parity, sector, wavefunction.state_kind, wavefunction,
                equation.label))

    if susy:
        states.extend(_zero_energy_states(kind, sector, anti_bound))

    states.sort(key=lambda state: state.energy)
    logger.debug('%d states found for %s in the sector %s', len(states),
                 kind, sector)

    return states

# -----------------------------------------------------------------------------


def classify_delta_step_pole(mu, g, susy=False, sector=0):
    """Pole of the delta step amplitudes and its classification.

    Without the wells the pole of k + p + i mu = 0 sits at
    kappa = -(mu - g/mu)/2, eta = -(mu + g/mu)/2 with E = -kappa^2. With
    the wells the pole is at zero energy with the same decay constants in
    the sector 0 and the opposite ones in the sector 1. The pole is a bound
    state when both decay constants are positive.

    :param mu: strength of the delta, nonzero.
    :param g: height of the step.
    :param susy: True for the supersymmetric partner potentials.
    :param sector: 0 or 1, used when susy is True.
    :return: DeltaStepPole.
    """

    if mu == 0:
        raise SusyConfigurationError('delta_step: mu must be nonzero')

    kappa = -0.5 * (mu - g / mu)
    eta = -0.5 * (mu + g / mu)
    if susy:
        sign = (-1) ** sector
        kappa, eta = sign * kappa, sign * eta
        energy = 0.0
    else:
        energy = -kappa ** 2

    return DeltaStepPole(energy, kappa, eta, _classify((kappa, eta)))

# -----------------------------------------------------------------------------


def double_equal_norm_constant(alpha, a, energy, parity, sector=0):
    """Closed form normalization of a bound state of two equal deltas.

    The even state is N cos(qx) inside and N cos(qa) exp(-kappa(|x| - a))
    outside, N^-2 = cos^2(qa)/kappa + a + sin(2qa)/(2q); the odd state uses
    sin with N^-2 = sin^2(qa)/kappa + a - sin(2qa)/(2q).

    :param alpha: strength of the deltas.
    :param a: half distance between the deltas.
    :param energy: bound state energy in (0, alpha^2).
    :param parity: 'even' or 'odd'.
    :param sector: 0 or 1, the normalization does not depend on it.
    :return: float -- N.
    """

    q = np.sqrt(energy)
    kappa = np.sqrt(alpha ** 2 - energy)
    if parity == 'even':
        inverse = np.cos(q * a) ** 2 / kappa + a + np.sin(2 * q * a) / (2 * q)
    else:
        inverse = np.sin(q * a) ** 2 / kappa + a - np.sin(2 * q * a) / (2 * q)

    return float(1 / np.sqrt(inverse))

# -----------------------------------------------------------------------------


def _intertwining_residual(superpotential, state0, state1):
    """Relative distance between (d/dx - W') psi_0 and a multiple of psi_1."""

    wave0, wave1 = state0.wavefunction, state1.wavefunction
    points = np.asarray(wave0.breakpoints)
    span = max(points[-1] - points[0], 1.0)
    reach = 3.0 / min(wave0.left_exponent, wave0.right_exponent)
    x = np.linspace(points[0] - reach, points[-1] + reach, 2001)
    clearance = SUSY_DEFAULTS.kink_clearance * span
    away = np.min(np.abs(x[:, None] - points[None, :]), axis=1) > clearance
    x = x[away]

    lowered = wave0.derivative(x) - superpotential.derivative(x) * wave0(x)
    target = wave1(x)
    constant = np.dot(lowered, target) / np.dot(target, target)
    scale = np.max(np.abs(lowered))

    return float(np.max(np.abs(lowered - constant * target)) / scale)


def susy_pairing_report(kind, samples=SUSY_DEFAULTS.scan_samples):
    """Pairs the bound states of the two sectors.

    Positive energies of the sector 0 and the sector 1 are matched within
    the pairing tolerance, the zero modes are singlets. Every pair is
    checked by applying d/dx - W' to the sector 0 state, which must be
    proportional to the sector 1 state away from the kinks.

    :param kind: ConfigKind with finite extent.
    :param samples: scan resolution.
    :return: PairingReport.
    """

    function_name = susy_pairing_report.__name__
    susy_data_tools_delta_arrays \
        .susy_function_header_print_data(function_name, kind)

    states0 = find_bound_states(kind, 0, samples=samples)
    states1 = find_bound_states(kind, 1, samples=samples)
    states = states0 + states1
    offset = len(states0)
    superpotential = susy_data_model_delta_arrays.build_superpotential(kind)
    tol = SUSY_DEFAULTS.pairing_tol

    pairs, singlets, residuals = [], [], []
    free = [j for j, state in enumerate(states1) if state.energy > 0]
    for i, state0 in enumerate(states0):
        if state0.energy == 0:
            singlets.append(i)
            continue
        match = [j for j in free
                 if abs(states1[j].energy - state0.energy)
                 < tol * max(1.0, state0.energy)]
        if not match:
            raise SusyInconsistencyError(
                f'sector 0 state at E = {state0.energy} has no partner')
        j = match[0]
        free.remove(j)
        residual = _intertwining_residual(superpotential, state0, states1[j])
        if residual > SUSY_DEFAULTS.intertwining_tol:
            raise SusyInconsistencyError(
                f'intertwining residual {residual:.3g} at '
                f'E = {state0.energy}')
        pairs.append((i, offset + j))
        residuals.append(residual)

    if free:
        raise SusyInconsistencyError(
            f'sector 1 states without partner: '
            f'{[states1[j].energy for j in free]}')

    singlets.extend(offset + j for j, state in enumerate(states1)
                    if state.energy == 0)

    return PairingReport(states, pairs, singlets, residuals)

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    states = find_bound_states(DoubleEqual(2.0, 7.0), 0)
    logger.info('DoubleEqual(2, 7) sector 0 energies: %s',
                [state.energy for state in states[:4]])

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
