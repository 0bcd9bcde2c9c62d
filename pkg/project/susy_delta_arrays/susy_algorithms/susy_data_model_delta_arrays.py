'''SUSY delta arrays model module.

The functions in the module build the superpotential of every configuration
of Dirac delta interactions, derive the two partner potentials
V_s = W'^2 + (-1)^s W'' and the candidate zero modes exp(+-W).

A superpotential is continuous and piecewise linear: its kinks are the
positions of the deltas, the squared slopes are the floors of the
quasi-square wells and the slope jumps are the delta strengths.

This script requires the following modules:
    * dataclasses
    * logging
    * numpy
    * typing
    * susy_data_tools_delta_arrays

The module contains the following functions:
    * config_from_dict - builds a configuration from its JSON object.
    * config_to_dict - JSON object of a configuration.
    * build_superpotential - superpotential of a configuration.
    * partner_potentials - V_0 and V_1 generated by a superpotential.
    * potential_for - partner potential of a configuration in a sector.
    * zero_mode - candidate zero mode exp(+-W) of a sector.
    * annihilation_residual - finite difference check of (d/dx -+ W') psi.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass, field, fields
import logging
from typing import ClassVar, Optional, Tuple

import numpy as np

import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import SUSY_DEFAULTS, SusyConfigurationError

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# Configurations


@dataclass(frozen=True)
class ConfigKind:
    """Base class of the configurations of delta interactions."""

    name: ClassVar[str] = ''

    def validate(self):
        for item in fields(self):
            value = getattr(self, item.name)
            if not np.isfinite(value):
                raise SusyConfigurationError(
                    f'{self.name}: {item.name} must be finite')
        if hasattr(self, 'a') and not self.a > 0:
            raise SusyConfigurationError(f'{self.name}: a must be positive')

    def __post_init__(self):
        self.validate()

    @property
    def symmetric(self):
        """True when the partner potentials are even in x."""
        return False


@dataclass(frozen=True)
class FreeParticle(ConfigKind):
    """No interaction, W = 0."""

    name: ClassVar[str] = 'free'

    @property
    def symmetric(self):
        return True


@dataclass(frozen=True)
class DeltaStep(ConfigKind):
    """One delta of strength mu at the origin on top of a step g."""

    name: ClassVar[str] = 'delta_step'
    mu: float = 1.0
    g: float = 0.0

    def validate(self):
        super().validate()
        if self.mu == 0:
            raise SusyConfigurationError('delta_step: mu must be nonzero')


@dataclass(frozen=True)
class DoubleEqual(ConfigKind):
    """Two deltas of equal strength alpha at -a and a."""

    name: ClassVar[str] = 'double_equal'
    alpha: float = 1.0
    a: float = 1.0

    @property
    def symmetric(self):
        return True


@dataclass(frozen=True)
class DoubleUnequal(ConfigKind):
    """Two deltas of strengths alpha at -a and beta at a."""

    name: ClassVar[str] = 'double_unequal'
    alpha: float = 1.0
    beta: float = 1.0
    a: float = 1.0


@dataclass(frozen=True)
class TripleUnequal(ConfigKind):
    """Deltas alpha at -a, mu at 0 and beta at a."""

    name: ClassVar[str] = 'triple_unequal'
    alpha: float = 1.0
    mu: float = 1.0
    beta: float = 1.0
    a: float = 1.0


@dataclass(frozen=True)
class TripleAlternating(ConfigKind):
    """W = (alpha/2)(|x| - |x - a| - |x + a|)."""

    name: ClassVar[str] = 'triple_alternating'
    alpha: float = 1.0
    a: float = 1.0

    @property
    def symmetric(self):
        return True


@dataclass(frozen=True)
class AlternatingArray(ConfigKind):
    """W = (alpha/2) sum_{n=-J}^{J} (-1)^n |x - n a|."""

    name: ClassVar[str] = 'alternating_array'
    alpha: float = 1.0
    a: float = 1.0
    J: int = 1

    def validate(self):
        super().validate()
        if int(self.J) != self.J or self.J < 1:
            raise SusyConfigurationError(
                'alternating_array: J must be a positive integer')

    @property
    def symmetric(self):
        return True


@dataclass(frozen=True)
class AlternatingComb(ConfigKind):
    """Infinite alternating comb, period 2a."""

    name: ClassVar[str] = 'alternating_comb'
    alpha: float = 1.0
    a: float = 1.0

    @property
    def symmetric(self):
        return True


CONFIG_KINDS = {cls.name: cls for cls in (
    FreeParticle, DeltaStep, DoubleEqual, DoubleUnequal, TripleUnequal,
    TripleAlternating, AlternatingArray, AlternatingComb)}

# -----------------------------------------------------------------------------


def config_from_dict(data):
    """Builds a configuration from its JSON object.

    :param data: dictionary like {"kind": "double_unequal", "alpha": 2.0,
     "beta": 4.0, "a": 7.0}.
    :return: ConfigKind -- the configuration.
    """

    if not isinstance(data, dict) or 'kind' not in data:
        raise SusyConfigurationError('configuration needs a "kind" entry')

    try:
        cls = CONFIG_KINDS[data['kind']]
    except KeyError:
        raise SusyConfigurationError(
            f'unknown configuration kind {data["kind"]!r}')

    params = {key: value for key, value in data.items() if key != 'kind'}
    names = {item.name for item in fields(cls)}
    unknown = set(params) - names
    if unknown:
        raise SusyConfigurationError(
            f'{cls.name}: unknown parameters {sorted(unknown)}')

    try:
        if 'J' in params:
            params['J'] = int(params['J'])
        return cls(**params)
    except TypeError as error:
        raise SusyConfigurationError(f'{cls.name}: {error}')

# -----------------------------------------------------------------------------


def config_to_dict(kind):
    """JSON object of a configuration.

    :param kind: ConfigKind.
    :return: dict.
    """

    data = {'kind': kind.name}
    for item in fields(kind):
        data[item.name] = getattr(kind, item.name)

    return data

# -----------------------------------------------------------------------------
# Superpotential and potentials


@dataclass(frozen=True)
class Superpotential:
    """Continuous piecewise linear superpotential.

    slopes[0] is the left tail, slopes[-1] the right tail and slopes[i] the
    slope on (breakpoints[i-1], breakpoints[i]). With a period the function
    is evaluated on x modulo the period.
    """

    breakpoints: Tuple[float, ...]
    slopes: Tuple[float, ...]
    values: Tuple[float, ...]
    period: Optional[float] = None

    def __post_init__(self):
        if len(self.slopes) != len(self.breakpoints) + 1:
            raise SusyConfigurationError(
                'number of slopes must be number of breakpoints + 1')
        if len(self.values) != len(self.breakpoints):
            raise SusyConfigurationError('one value per breakpoint')
        if np.any(np.diff(self.breakpoints) <= 0):
            raise SusyConfigurationError('breakpoints must increase')
        if not np.all(np.isfinite(self.slopes)):
            raise SusyConfigurationError('slopes must be finite')

        for i in range(1, len(self.breakpoints)):
            step = self.slopes[i] * (self.breakpoints[i]
                                     - self.breakpoints[i - 1])
            expected = self.values[i - 1] + step
            scale = max(1.0, abs(expected))
            if abs(expected - self.values[i]) > 1e-12 * scale:
                raise SusyConfigurationError(
                    f'superpotential discontinuous at {self.breakpoints[i]}')

    @property
    def v_plus(self):
        return self.slopes[-1]

    @property
    def v_minus(self):
        return -self.slopes[0]

    def _wrap(self, x):
        x = np.asarray(x, dtype=float)
        if self.period is not None:
            x = np.mod(x, self.period)
        return x

    def __call__(self, x):
        x = self._wrap(x)
        if not self.breakpoints:
            return self.slopes[0] * x
        points = np.asarray(self.breakpoints)
        idx = np.searchsorted(points, x, side='right')
        ref = np.clip(idx - 1, 0, len(points) - 1)
        slopes = np.asarray(self.slopes)[idx]
        return np.asarray(self.values)[ref] + slopes * (x - points[ref])

    def derivative(self, x):
        """W'(x), right limit at the kinks."""
        x = self._wrap(x)
        idx = np.searchsorted(np.asarray(self.breakpoints), x, side='right')
        return np.asarray(self.slopes, dtype=float)[idx]

    def jumps(self):
        """Slope jump at every breakpoint."""
        return tuple(right - left for left, right
                     in zip(self.slopes[:-1], self.slopes[1:]))


@dataclass(frozen=True)
class PotentialSpec:
    """Zones of constant floor plus delta interactions at the boundaries."""

    zone_boundaries: Tuple[float, ...]
    floors: Tuple[float, ...]
    deltas: Tuple[Tuple[float, float], ...]
    period: Optional[float] = None

    def __post_init__(self):
        if len(self.floors) != len(self.zone_boundaries) + 1:
            raise SusyConfigurationError('one floor per zone')
        positions = [pos for pos, _ in self.deltas]
        if np.any(np.diff(positions) <= 0):
            raise SusyConfigurationError(
                'delta positions must strictly increase')

    def strength_at(self, position):
        for pos, strength in self.deltas:
            if pos == position:
                return strength
        return 0.0

# -----------------------------------------------------------------------------


def _alternating_array(alpha, a, J):
    """Breakpoints, slopes and values of the finite alternating array."""

    ns = np.arange(-J, J + 1)
    signs = (-1.0) ** np.abs(ns)
    points = ns * a

    def w_of(x):
        return 0.5 * alpha * np.sum(signs * np.abs(x - points))

    values = tuple(float(w_of(x)) for x in points)
    tail = 0.5 * alpha * (-1.0) ** J
    inner = []
    for left, right in zip(points[:-1], points[1:]):
        mid = 0.5 * (left + right)
        inner.append(float(0.5 * alpha * np.sum(signs * np.sign(mid
                                                                - points))))

    return (tuple(float(p) for p in points), (-tail, *inner, tail), values)

# -----------------------------------------------------------------------------


def build_superpotential(kind):
    """Superpotential of a configuration.

    The value at the leftmost breakpoint follows the closed form of W, so the
    values are reproducible. The alternating comb is stored on the primitive
    cell [0, 2a] with the eta(-1) = -1/4 regularized anchor
    W(0) = -alpha a / 4.

    :param kind: ConfigKind.
    :return: Superpotential -- the superpotential.
    """

    susy_data_tools_delta_arrays \
        .susy_function_header_print_data('build_superpotential', kind)

    if isinstance(kind, FreeParticle):
        return Superpotential((), (0.0,), ())

    if isinstance(kind, DeltaStep):
        mu, g = kind.mu, kind.g
        return Superpotential((0.0,), (-mu / 2 + g / (2 * mu),
                                       mu / 2 + g / (2 * mu)), (0.0,))

    if isinstance(kind, DoubleEqual):
        alpha, a = kind.alpha, kind.a
        return Superpotential((-a, a), (-alpha, 0.0, alpha),
                              (alpha * a, alpha * a))

    if isinstance(kind, DoubleUnequal):
        alpha, beta, a = kind.alpha, kind.beta, kind.a
        plateau = (alpha + beta) * a / 2
        return Superpotential((-a, a), (-alpha, 0.0, beta),
                              (plateau, plateau))

    if isinstance(kind, TripleUnequal):
        alpha, mu, beta, a = kind.alpha, kind.mu, kind.beta, kind.a
        centre = (alpha + beta) * a / 2
        return Superpotential(
            (-a, 0.0, a),
            (-alpha - mu / 2, -mu / 2, mu / 2, beta + mu / 2),
            (centre + mu * a / 2, centre, centre + mu * a / 2))

    if isinstance(kind, TripleAlternating):
        alpha, a = kind.alpha, kind.a
        return Superpotential(
            (-a, 0.0, a),
            (alpha / 2, -alpha / 2, alpha / 2, -alpha / 2),
            (-alpha * a / 2, -alpha * a, -alpha * a / 2))

    if isinstance(kind, AlternatingArray):
        points, slopes, values = _alternating_array(kind.alpha, kind.a,
                                                    kind.J)
        return Superpotential(points, slopes, values)

    if isinstance(kind, AlternatingComb):
        alpha, a = kind.alpha, kind.a
        eta = SUSY_DEFAULTS.eta_minus_one
        # sum_n (-1)^n |n| = 2 eta(-1) and sum_n (-1)^n |1 - n| = -2 eta(-1)
        w_zero = alpha * a * eta
        w_a = -alpha * a * eta
        return Superpotential((0.0, a), (-alpha / 2, alpha / 2, -alpha / 2),
                              (w_zero, w_a), period=2 * a)

    raise SusyConfigurationError(f'unknown configuration {kind!r}')

# -----------------------------------------------------------------------------


def partner_potentials(superpotential):
    """V_0 and V_1 generated by a superpotential.

    The floor of every zone is the squared slope, the delta strength at a
    breakpoint is (-1)^s times the slope jump.

    :param superpotential: Superpotential.
    :return: tuple -- (PotentialSpec V_0, PotentialSpec V_1).
    """

    floors = tuple(slope ** 2 for slope in superpotential.slopes)
    jumps = superpotential.jumps()
    points = superpotential.breakpoints
    potentials = []
    for sector in (0, 1):
        sign = (-1) ** sector
        deltas = tuple((pos, sign * jump) for pos, jump in zip(points, jumps)
                       if jump != 0)
        potentials.append(PotentialSpec(points, floors, deltas,
                                        superpotential.period))

    return tuple(potentials)

# -----------------------------------------------------------------------------


def potential_for(kind, sector):
    """Partner potential V_s of a configuration.

    :param kind: ConfigKind.
    :param sector: 0 (bosonic) or 1 (fermionic).
    :return: PotentialSpec.
    """

    return partner_potentials(build_superpotential(kind))[sector]

# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroMode:
    """Candidate zero mode exp(+W) (sector 0) or exp(-W) (sector 1).

    norm_constant is the peak value of the normalized state, so the unit
    norm state is norm_constant * exp(+-(W - W_peak)).
    """

    superpotential: Superpotential
    sector: int
    normalizable: bool
    norm_constant: Optional[float] = None
    peak_exponent: float = field(default=0.0)

    @property
    def exponent_sign(self):
        return 1.0 if self.sector == 0 else -1.0

    def __call__(self, x):
        return np.exp(self.exponent_sign * self.superpotential(x))

    def normalized(self, x):
        if not self.normalizable:
            raise SusyConfigurationError('zero mode is not normalizable')
        exponent = self.exponent_sign * self.superpotential(x)
        return self.norm_constant * np.exp(exponent - self.peak_exponent)

    def derivative(self, x):
        return (self.exponent_sign * self.superpotential.derivative(x)
                * self(x))


def _exp_piece(start, slope, length):
    """Integral of exp(2 (start + slope t)) for t in [0, length]."""

    if length == np.inf:
        return np.exp(2 * start) / (-2 * slope)
    if slope == 0:
        return length * np.exp(2 * start)

    return np.exp(2 * start) * np.expm1(2 * slope * length) / (2 * slope)


def zero_mode(superpotential, sector):
    """Candidate zero mode of a sector and its normalization.

    The state is normalizable when both tails decay: v_- < 0 and v_+ < 0
    in the sector 0, v_- > 0 and v_+ > 0 in the sector 1. Slopes within
    the threshold of zero count as non decaying.

    :param superpotential: Superpotential.
    :param sector: 0 (bosonic) or 1 (fermionic).
    :return: ZeroMode -- the zero mode.
    """

    sign = 1.0 if sector == 0 else -1.0
    threshold = SUSY_DEFAULTS.slope_threshold
    v_minus, v_plus = superpotential.v_minus, superpotential.v_plus

    periodic = superpotential.period is not None
    decays = (-sign * v_minus > threshold) and (-sign * v_plus > threshold)
    if periodic or not decays or not superpotential.breakpoints:
        return ZeroMode(superpotential, sector, False)

    points = superpotential.breakpoints
    exps = [sign * value for value in superpotential.values]
    peak = max(exps)
    shifted = [value - peak for value in exps]
    slopes = [sign * slope for slope in superpotential.slopes]

    # tails: exponent grows with slope slopes[0] to the left of points[0]
    total = _exp_piece(shifted[0], -slopes[0], np.inf)
    total += _exp_piece(shifted[-1], slopes[-1], np.inf)
    for i in range(1, len(points)):
        total += _exp_piece(shifted[i - 1], slopes[i],
                            points[i] - points[i - 1])

    return ZeroMode(superpotential, sector, True, float(1 / np.sqrt(total)),
                    peak)

# -----------------------------------------------------------------------------


def annihilation_residual(mode, x, step):
    """Centered finite difference residual of (d/dx -+ W') exp(+-W).

    :param mode: ZeroMode.
    :param x: sample points away from the kinks.
    :param step: finite difference step.
    :return: array -- residual relative to the local value of the mode.
    """

    x = np.asarray(x, dtype=float)
    slope = mode.superpotential.derivative(x)
    numeric = (mode(x + step) - mode(x - step)) / (2 * step)

    return (numeric - mode.exponent_sign * slope * mode(x)) / mode(x)

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    kind = DoubleUnequal(2.0, 4.0, 7.0)
    mode = zero_mode(build_superpotential(kind), 1)
    logger.info('Zero mode normalizable: %s, constant %s', mode.normalizable,
                mode.norm_constant)

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
