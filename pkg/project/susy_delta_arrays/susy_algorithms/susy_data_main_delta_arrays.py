'''SUSY delta arrays main module.

Command line front end of the study. The subcommands read a configuration
JSON file, run the modules of the study and write JSON or CSV to the
standard output or to a file:

    scatter    amplitudes on an energy grid (CSV).
    bound      bound states of one or both sectors with their pairing, the
               anti-bound zero modes listed apart on request.
    bands      bands of the alternating comb.
    witten     regularized Witten index.
    zero-mode  zero mode exp(+-W) of a sector.
    verify     cross checks of the closed forms against the oracle on
               randomized configurations of both signs.

Exit codes: 0 on success, 1 when a cross check or the pairing fails, 2 on a
configuration or usage error.

This script requires the following modules:
    * argparse
    * dataclasses
    * json
    * logging
    * numpy
    * pandas
    * sys
    * typing
    * susy_data_comb_delta_arrays
    * susy_data_model_delta_arrays
    * susy_data_oracle_delta_arrays
    * susy_data_scattering_delta_arrays
    * susy_data_spectra_delta_arrays
    * susy_data_tools_delta_arrays
    * susy_data_witten_delta_arrays

The module contains the following functions:
    * build_parser - argument parser with the subcommands.
    * run_config_from_args - RunConfig from the parsed arguments.
    * verify_suite - cross checks of the study.
    * run - runs a command line and returns the exit code.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import argparse
from dataclasses import asdict, dataclass, field
import json
import logging
import sys
from typing import Optional, Tuple

import numpy as np
import pandas as pd

import susy_data_comb_delta_arrays
import susy_data_model_delta_arrays
from susy_data_model_delta_arrays import (AlternatingArray, DeltaStep,
                                          DoubleEqual, DoubleUnequal,
                                          TripleAlternating, TripleUnequal)
import susy_data_oracle_delta_arrays
import susy_data_scattering_delta_arrays
import susy_data_spectra_delta_arrays
import susy_data_tools_delta_arrays
from susy_data_tools_delta_arrays import (SUSY_DEFAULTS,
                                          SusyConfigurationError, SusyError,
                                          SusyInconsistencyError)
import susy_data_witten_delta_arrays

logger = logging.getLogger(__name__)

PROG = 'susy-delta-arrays'
DEFAULT_T_LIST = (1e-1, 1e-2, 1e-3, 1e-4)
# amplitude samples, pairing configurations, bound state sets
VERIFY_SAMPLES = (1000, 50, 20)

# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs, assembled from the flags and the
    configuration file.
    """

    command: str
    config: Optional[susy_data_model_delta_arrays.ConfigKind] = None
    sector: str = '0'
    energy_grid: Tuple[float, float, int] = (0.01, 10.0, 200)
    k_grid: Tuple[float, int] = (14.0, 1000)
    q_samples: int = SUSY_DEFAULTS.q_samples
    root_tol: float = SUSY_DEFAULTS.root_tol
    match_tol: float = SUSY_DEFAULTS.match_tol
    quad_tol: float = SUSY_DEFAULTS.quad_tol
    t_values: Tuple[float, ...] = DEFAULT_T_LIST
    alpha: Optional[float] = None
    a: Optional[float] = None
    anti_bound: bool = False
    susy: bool = True
    verify_samples: Tuple[int, int, int] = VERIFY_SAMPLES
    csv_path: Optional[str] = None
    fmt: str = 'json'
    out: Optional[str] = None
    threads: int = 1
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.energy_grid[2] < 2 or self.k_grid[1] < 2 \
                or self.q_samples < 2:
            raise SusyConfigurationError('grid counts must be at least 2')
        if min(self.root_tol, self.match_tol, self.quad_tol) <= 0:
            raise SusyConfigurationError('tolerances must be positive')
        if self.fmt not in ('json', 'csv'):
            raise SusyConfigurationError(f'unknown format {self.fmt!r}')
        if self.threads < 1:
            raise SusyConfigurationError('threads must be at least 1')
        if min(self.verify_samples) < 1:
            raise SusyConfigurationError('verify sample counts must be at '
                                         'least 1')

    def to_dict(self):
        data = asdict(self)
        data['config'] = None if self.config is None \
            else susy_data_model_delta_arrays.config_to_dict(self.config)
        for key in ('energy_grid', 'k_grid', 't_values', 'verify_samples'):
            data[key] = list(data[key])
        return data

    @classmethod
    def from_dict(cls, data):
        data = dict(data)
        if data.get('config') is not None:
            data['config'] = susy_data_model_delta_arrays.config_from_dict(
                data['config'])
        for key in ('energy_grid', 'k_grid', 't_values', 'verify_samples'):
            if key in data:
                data[key] = tuple(data[key])
        return cls(**data)

# -----------------------------------------------------------------------------


def _load_config(path):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as error:
        raise SusyConfigurationError(f'cannot read {path}: {error}')
    except json.JSONDecodeError as error:
        raise SusyConfigurationError(f'malformed JSON in {path}: {error}')

    return susy_data_model_delta_arrays.config_from_dict(data)


def build_parser():
    """Argument parser with the global flags and the subcommands.

    :return: ArgumentParser.
    """

    parser = argparse.ArgumentParser(
        prog=PROG,
        description='Supersymmetric quantum mechanics of Dirac delta arrays.')
    parser.add_argument('--out', help='output file, standard output if '
                        'missing')
    parser.add_argument('--format', dest='fmt', choices=('json', 'csv'),
                        help='output format')
    parser.add_argument('--threads', type=int, default=1,
                        help='worker processes for the energy grids')
    parser.add_argument('--seed', type=int, default=0,
                        help='seed of the randomized verify sweeps')
    parser.add_argument('--verbose', action='store_true',
                        help='debug logging on the error stream')
    sub = parser.add_subparsers(dest='command', required=True)

    scatter = sub.add_parser('scatter', help='amplitudes on an energy grid')
    scatter.add_argument('--config', required=True)
    scatter.add_argument('--sector', choices=('0', '1'), default='0')
    scatter.add_argument('--e-min', type=float, default=0.01)
    scatter.add_argument('--e-max', type=float, default=10.0)
    scatter.add_argument('--e-samples', type=int, default=200)

    bound = sub.add_parser('bound', help='bound states and their pairing')
    bound.add_argument('--config', required=True)
    bound.add_argument('--sector', choices=('0', '1', 'both'),
                       default='both')
    bound.add_argument('--anti-bound', action='store_true')
    bound.add_argument('--non-susy', action='store_true',
                       help='configuration without the wells')

    bands = sub.add_parser('bands', help='bands of the alternating comb')
    bands.add_argument('--alpha', type=float, required=True)
    bands.add_argument('--a', type=float, required=True)
    bands.add_argument('--k-max', type=float, default=14.0)
    bands.add_argument('--q-samples', type=int,
                       default=SUSY_DEFAULTS.q_samples)
    bands.add_argument('--k-samples', type=int, default=1000)
    bands.add_argument('--csv', dest='csv_path',
                       help='file for the g(k) curve')

    witten = sub.add_parser('witten', help='regularized Witten index')
    witten.add_argument('--config', required=True)
    witten.add_argument('--t-list', type=float, nargs='+',
                        default=list(DEFAULT_T_LIST))

    zero = sub.add_parser('zero-mode', help='zero mode of a sector')
    zero.add_argument('--config', required=True)
    zero.add_argument('--sector', choices=('0', '1'), default='0')
    zero.add_argument('--x-min', type=float, default=-10.0)
    zero.add_argument('--x-max', type=float, default=10.0)
    zero.add_argument('--x-samples', type=int, default=201)

    verify = sub.add_parser('verify', help='cross checks of the study')
    verify.add_argument('--amplitude-samples', type=int,
                        default=VERIFY_SAMPLES[0],
                        help='random (configuration, energy) samples')
    verify.add_argument('--pairing-samples', type=int,
                        default=VERIFY_SAMPLES[1],
                        help='random configurations of the pairing check')
    verify.add_argument('--bound-samples', type=int,
                        default=VERIFY_SAMPLES[2],
                        help='random configurations of the bound state '
                        'check')

    return parser

# -----------------------------------------------------------------------------


def run_config_from_args(args):
    """RunConfig of a parsed command line.

    :param args: Namespace returned by build_parser().parse_args.
    :return: RunConfig.
    """

    command = args.command
    config = _load_config(args.config) if getattr(args, 'config', None) \
        else None
    default_fmt = 'csv' if command == 'scatter' else 'json'
    extra = {}
    if command == 'zero-mode':
        extra = {'x_min': args.x_min, 'x_max': args.x_max,
                 'x_samples': args.x_samples}

    return RunConfig(
        command=command, config=config,
        sector=getattr(args, 'sector', '0'),
        energy_grid=(getattr(args, 'e_min', 0.01),
                     getattr(args, 'e_max', 10.0),
                     getattr(args, 'e_samples', 200)),
        k_grid=(getattr(args, 'k_max', 14.0),
                getattr(args, 'k_samples', 1000)),
        q_samples=getattr(args, 'q_samples', SUSY_DEFAULTS.q_samples),
        t_values=tuple(getattr(args, 't_list', DEFAULT_T_LIST)),
        alpha=getattr(args, 'alpha', None), a=getattr(args, 'a', None),
        anti_bound=getattr(args, 'anti_bound', False),
        susy=not getattr(args, 'non_susy', False),
        verify_samples=(getattr(args, 'amplitude_samples', VERIFY_SAMPLES[0]),
                        getattr(args, 'pairing_samples', VERIFY_SAMPLES[1]),
                        getattr(args, 'bound_samples', VERIFY_SAMPLES[2])),
        csv_path=getattr(args, 'csv_path', None),
        fmt=args.fmt or default_fmt, out=args.out, threads=args.threads,
        seed=args.seed, extra=extra)

# -----------------------------------------------------------------------------


def _cmd_scatter(cfg):
    e_min, e_max, count = cfg.energy_grid
    energies = np.linspace(e_min, e_max, count)
    frame = susy_data_scattering_delta_arrays.scattering_grid_frame(
        cfg.config, int(cfg.sector), energies, cfg.threads)
    if cfg.fmt == 'json':
        return frame.to_dict(orient='records')

    return frame


def _cmd_bound(cfg):
    kind = cfg.config
    if cfg.sector == 'both' and cfg.susy:
        data = susy_data_spectra_delta_arrays.susy_pairing_report(kind) \
            .to_dict()
        if cfg.anti_bound:
            # the pairing runs on the bound states only
            data['anti_bound'] = []
            for sector in (0, 1):
                states = susy_data_spectra_delta_arrays.find_bound_states(
                    kind, sector, anti_bound=True)
                data['anti_bound'].extend(state.to_dict() for state in states
                                          if state.kind != 'bound')
        return data

    sectors = (0, 1) if cfg.sector == 'both' else (int(cfg.sector),)
    if not cfg.susy:
        sectors = (0,)
    states = []
    for sector in sectors:
        states.extend(susy_data_spectra_delta_arrays.find_bound_states(
            kind, sector, susy=cfg.susy, anti_bound=cfg.anti_bound))
    singlets = [i for i, state in enumerate(states)
                if state.energy == 0 and state.kind == 'bound']

    return {'states': [state.to_dict() for state in states], 'pairs': [],
            'singlets': singlets}


def _cmd_bands(cfg):
    alpha, a = cfg.alpha, cfg.a
    k_max, k_samples = cfg.k_grid
    bands = susy_data_comb_delta_arrays.propagating_bands(alpha, a, k_max)
    band = susy_data_comb_delta_arrays.nonpropagating_band(alpha, a,
                                                           cfg.q_samples)
    if cfg.csv_path is not None:
        curve = susy_data_comb_delta_arrays.g_curve_frame(alpha, a, k_max,
                                                          k_samples)
        susy_data_tools_delta_arrays.susy_save_data('g_curve', curve,
                                                    cfg.csv_path, 'csv')

    return {'propagating': [item.to_dict() for item in bands],
            'non_propagating': band.to_dict()}


def _cmd_witten(cfg):
    return susy_data_witten_delta_arrays.witten_index(
        cfg.config, cfg.t_values).to_dict()


def _cmd_zero_mode(cfg):
    sector = int(cfg.sector)
    superpotential = susy_data_model_delta_arrays.build_superpotential(
        cfg.config)
    mode = susy_data_model_delta_arrays.zero_mode(superpotential, sector)
    x = np.linspace(cfg.extra['x_min'], cfg.extra['x_max'],
                    cfg.extra['x_samples'])
    profile = mode.normalized(x) if mode.normalizable else mode(x)
    if cfg.fmt == 'csv':
        return pd.DataFrame({'x': x, 'psi': profile})

    points = np.asarray(superpotential.breakpoints, dtype=float)
    return {'sector': sector, 'normalizable': mode.normalizable,
            'norm_constant': mode.norm_constant,
            'points': points.tolist(),
            'values': np.atleast_1d(mode(points)).tolist()}

# -----------------------------------------------------------------------------


def _check(name, residual, tolerance):
    residual = float(residual)
    return {'name': name, 'max_residual': residual, 'tolerance': tolerance,
            'passed': bool(np.isfinite(residual) and residual <= tolerance)}


AMPLITUDE_FAMILIES = ('delta_step', 'double_equal', 'double_unequal',
                      'triple_unequal', 'triple_alternating',
                      'alternating_array')
SPECTRAL_FAMILIES = ('double_equal', 'double_unequal', 'triple_unequal')


def _random_config(rng, family, paired=False):
    """Random configuration of a family, strengths of both signs.

    With paired the two outer slopes of W have opposite signs, so exactly
    one sector has a normalizable zero mode.

    :param rng: numpy Generator.
    :param family: name of the configuration family.
    :param paired: draw a configuration with unbroken supersymmetry.
    :return: ConfigKind.
    """

    sign = float(rng.choice((-1.0, 1.0)))
    alpha, beta = sign * rng.uniform(0.5, 3.0, size=2)
    if not paired:
        beta = float(rng.choice((-1.0, 1.0))) * abs(beta)
    a = float(rng.uniform(0.3, 2.0))

    if family == 'delta_step':
        return DeltaStep(float(alpha), float(rng.uniform(-4.0, 4.0)))
    if family == 'double_equal':
        return DoubleEqual(float(alpha), a)
    if family == 'double_unequal':
        return DoubleUnequal(float(alpha), float(beta), a)
    if family == 'triple_unequal':
        if paired:
            # keeps alpha + mu/2 and beta + mu/2 on the side of sign
            mu = sign * rng.uniform(-0.8, 2.0)
        else:
            mu = rng.uniform(-3.0, 3.0)
        return TripleUnequal(float(alpha), float(mu), float(beta), a)
    if family == 'triple_alternating':
        return TripleAlternating(float(alpha), a)

    return AlternatingArray(float(alpha), a, int(rng.integers(1, 4)))


def _amplitude_checks(rng, samples):
    """Flux, modulus, map and oracle residuals on random open energies.

    The families are drawn in turn, every zone of the potential is open.
    """

    flux, moduli, maps, oracle = [0.0], [0.0], [0.0], [0.0]
    scattering = susy_data_scattering_delta_arrays
    names = ('sigma_r', 'rho_r', 'sigma_l', 'rho_l')
    for index in range(samples):
        family = AMPLITUDE_FAMILIES[index % len(AMPLITUDE_FAMILIES)]
        kind = _random_config(rng, family)
        superpotential = susy_data_model_delta_arrays.build_superpotential(
            kind)
        v_minus, v_plus = superpotential.v_minus, superpotential.v_plus
        floors = susy_data_model_delta_arrays.potential_for(kind, 0).floors
        energy = max(floors) + float(rng.uniform(0.1, 5.0))
        amps = [scattering.amplitudes_for(kind, sector, energy)
                for sector in (0, 1)]
        mapped = scattering.susy_map_amplitudes(amps[0], v_minus, v_plus)
        flux.extend(amp.flux_residual for amp in amps)
        moduli.extend(abs(abs(getattr(amps[0], name))
                          - abs(getattr(amps[1], name))) for name in names)
        maps.extend(abs(getattr(mapped, name) - getattr(amps[1], name))
                    for name in names)
        for sector in (0, 1):
            reference = susy_data_oracle_delta_arrays.oracle_amplitudes(
                susy_data_model_delta_arrays.potential_for(kind, sector),
                energy, sector)
            oracle.extend(abs(getattr(reference, name)
                              - getattr(amps[sector], name))
                          for name in names)

    return [_check('flux_conservation', max(flux), 1e-12),
            _check('sector_moduli', max(moduli), 1e-12),
            _check('susy_amplitude_maps', max(maps), 1e-10),
            _check('oracle_amplitudes', max(oracle), 1e-8)]


def _bound_state_deviation(kind, samples):
    """Largest distance between the closed form and the oracle energies,
    inf when the counts differ."""

    deviation = 0.0
    for sector in (0, 1):
        closed = [state.energy for state in
                  susy_data_spectra_delta_arrays.find_bound_states(
                      kind, sector, samples=samples) if state.energy > 0]
        brute = susy_data_oracle_delta_arrays.oracle_bound_states(
            susy_data_model_delta_arrays.potential_for(kind, sector),
            samples=samples)
        if len(closed) != len(brute):
            logger.error('Bound states of %s in the sector %d: closed form '
                         '%s, oracle %s', kind, sector, closed, brute)
            return np.inf
        deviation = max([deviation] + [abs(x - y)
                                       for x, y in zip(closed, brute)])

    return deviation


def _spectral_checks(rng, pairing_samples, bound_samples):
    """Bound states against the oracle and the pairing of the sectors."""

    deviation = [_bound_state_deviation(DoubleEqual(2.0, 7.0),
                                        SUSY_DEFAULTS.scan_samples)]
    for index in range(bound_samples):
        family = SPECTRAL_FAMILIES[index % len(SPECTRAL_FAMILIES)]
        deviation.append(_bound_state_deviation(
            _random_config(rng, family), 2000))

    pairing = [0.0]
    for index in range(pairing_samples):
        family = SPECTRAL_FAMILIES[index % len(SPECTRAL_FAMILIES)]
        config = _random_config(rng, family, paired=True)
        try:
            report = susy_data_spectra_delta_arrays.susy_pairing_report(
                config, samples=2000)
        except SusyInconsistencyError as error:
            logger.error('Pairing failed for %s: %s', config, error)
            pairing.append(np.inf)
            continue
        if len(report.singlets) != 1:
            logger.error('%s has %d singlets', config, len(report.singlets))
            pairing.append(np.inf)
        pairing.extend(report.intertwining)

    flips = []
    for factor, expected in ((0.99, 1), (1.01, 2)):
        alpha = 2.0
        states = susy_data_spectra_delta_arrays.find_bound_states(
            TripleAlternating(alpha, factor / alpha), 0)
        flips.append(abs(len(states) - expected))

    return [_check('oracle_bound_states', max(deviation), 1e-7),
            _check('susy_pairing', max(pairing),
                   SUSY_DEFAULTS.intertwining_tol),
            _check('triple_alternating_threshold', max(flips), 0)]


def _comb_checks():
    """Monodromy, band count, band edges and critical width."""

    comb = susy_data_comb_delta_arrays
    alpha, a, k_max = 3.0, 1.0, 14.0
    grid = np.linspace(0.01, k_max, 500)
    monodromy = max(abs(susy_data_oracle_delta_arrays.oracle_dispersion(
        alpha, a, k, sector) - comb.dispersion_g(k, alpha, a))
        for k in grid for sector in (0, 1))

    bands = comb.propagating_bands(alpha, a, k_max)
    edges = [0.0]
    for band in bands:
        for k in band.k_range:
            if 0 < k < k_max:
                edges.append(abs(comb.dispersion_g(k, alpha, a)) - 1)

    critical = 2 / alpha
    upper = comb.upper_edge_kappa(alpha, 1.01 * critical) is not None
    lower = comb.upper_edge_kappa(alpha, 0.99 * critical) is None

    return [_check('monodromy_dispersion', monodromy, 1e-9),
            _check('band_count', abs(len(bands) - 4), 0),
            _check('band_edges', max(edges), 1e-10),
            _check('critical_width', 0 if upper and lower else 1, 0)]


def _witten_checks():
    witten = susy_data_witten_delta_arrays
    deviation, limits = [], []
    for v in (0.5, 1.0, 3.0):
        terms = [witten.continuum_term(v, t) for t in DEFAULT_T_LIST]
        deviation.extend(abs(term - witten.continuum_term_closed_form(v, t))
                         for term, t in zip(terms, DEFAULT_T_LIST))
        limits.append(abs(witten.richardson_extrapolate(DEFAULT_T_LIST,
                                                        terms) - 1))

    modes = susy_data_comb_delta_arrays.comb_zero_modes(3.0, 1.0)
    comb = int(modes.index_contribution != 0 or modes.susy_broken)

    return [_check('witten_continuum', max(deviation), 1e-8),
            _check('witten_extrapolation', max(limits), 1e-4),
            _check('comb_zero_modes', comb, 0)]


def verify_suite(seed=0, amplitude_samples=VERIFY_SAMPLES[0],
                 pairing_samples=VERIFY_SAMPLES[1],
                 bound_samples=VERIFY_SAMPLES[2]):
    """Cross checks of the closed forms against the oracle.

    The amplitude sweep draws the six finite families in turn, so the
    default 1000 samples hold more than 100 cases of every family. The
    pairing sweep and the bound state sweep draw two delta and three delta
    configurations with strengths of both signs.

    :param seed: seed of the random configurations.
    :param amplitude_samples: random (configuration, energy) samples.
    :param pairing_samples: random configurations of the pairing check.
    :param bound_samples: random configurations compared with the oracle
     bound states, on top of DoubleEqual(2, 7).
    :return: dict -- {"checks": [...], "passed": bool}.
    """

    function_name = verify_suite.__name__
    susy_data_tools_delta_arrays \
        .susy_function_header_print_data(function_name, 'verify suite')

    rng = np.random.default_rng(seed)
    checks = _amplitude_checks(rng, amplitude_samples) \
        + _spectral_checks(rng, pairing_samples, bound_samples) \
        + _comb_checks() + _witten_checks()
    for item in checks:
        if not item['passed']:
            logger.error('Check %s failed: residual %g', item['name'],
                         item['max_residual'])

    samples = {'amplitudes': amplitude_samples, 'pairing': pairing_samples,
               'bound_states': bound_samples}
    return {'seed': seed, 'samples': samples, 'checks': checks,
            'passed': all(item['passed'] for item in checks)}

# -----------------------------------------------------------------------------


COMMANDS = {'scatter': _cmd_scatter, 'bound': _cmd_bound,
            'bands': _cmd_bands, 'witten': _cmd_witten,
            'zero-mode': _cmd_zero_mode}


def run(argv=None):
    """Runs a command line.

    :param argv: list of arguments without the program name.
    :return: int -- exit code.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2

    logging.basicConfig(level=logging.DEBUG if args.verbose
                        else logging.WARNING, stream=sys.stderr)
    susy_data_tools_delta_arrays.susy_initial_message()

    try:
        cfg = run_config_from_args(args)
        if cfg.command == 'verify':
            report = verify_suite(cfg.seed, *cfg.verify_samples)
            susy_data_tools_delta_arrays.susy_save_data(
                'verify_suite', report, cfg.out, 'json')
            return 0 if report['passed'] else 1

        data = COMMANDS[cfg.command](cfg)
        susy_data_tools_delta_arrays.susy_save_data(cfg.command, data,
                                                    cfg.out, cfg.fmt)
    except SusyConfigurationError as error:
        print(f'{PROG}: error: {error}', file=sys.stderr)
        return 2
    except SusyInconsistencyError as error:
        print(f'{PROG}: inconsistency: {error}', file=sys.stderr)
        return 1
    except SusyError as error:
        print(f'{PROG}: error: {error}', file=sys.stderr)
        return 2

    return 0

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function runs the command line.

    :return: None.
    """

    sys.exit(run(sys.argv[1:]))

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
