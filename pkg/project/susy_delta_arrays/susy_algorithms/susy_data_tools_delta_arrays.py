'''SUSY delta arrays tools module.

The functions in the module do small repetitive tasks, that are used along the
whole implementation. These tools improve the way the tasks are standardized
in the modules that use them: the table of numerical defaults, the error
classes, the principal branch of the channel momenta, the bracketing root
search and the saving of the computed data.

This script requires the following modules:
    * dataclasses
    * json
    * logging
    * numpy
    * os
    * pandas
    * scipy
    * sys

The module contains the following functions:
    * susy_function_header_print_data - logs info about the function running.
    * susy_initial_message - logs the initial message with basic information.
    * principal_momentum - channel momentum on the principal branch.
    * scan_roots - brackets sign changes on a grid and refines them.
    * merge_close - merges values closer than a tolerance.
    * susy_save_data - saves computed data in JSON or CSV format.
    * to_jsonable - converts numpy and complex values to JSON values.
    * main - the main function of the script.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from dataclasses import dataclass
import json
import logging
import os
import sys

import numpy as np
import pandas as pd
from scipy import optimize

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# Errors


class SusyError(Exception):
    """Base class of the errors raised by the susy_algorithms modules."""


class SusyConfigurationError(SusyError, ValueError):
    """Invalid configuration (strengths, distances or kind names)."""


class SusyPoleError(SusyError, ArithmeticError):
    """A scattering denominator vanishes at the requested real energy."""


class SusyMapSingularError(SusyError, ArithmeticError):
    """Threshold case of the supersymmetric amplitude maps."""


class SusyPartialSMatrixError(SusyError):
    """One of the two channels is closed, the S-matrix is not square."""


class SusyUnsupportedConfigurationError(SusyError):
    """The requested operation has no meaning for the configuration."""


class SusyNoScatteringError(SusyError):
    """Both asymptotic channels are closed."""


class SusyInvalidStateError(SusyError):
    """A Bloch state requested off the dispersion curve."""


class SusyInconsistencyError(SusyError, RuntimeError):
    """Two independent computations disagree beyond tolerance."""

# -----------------------------------------------------------------------------
# Defaults


@dataclass(frozen=True)
class SusyDefaults:
    """Numerical defaults shared by every module and by the command line.

    Units: hbar = 1 and 2m = 1, energies in length^-2.
    """

    scan_samples: int = 10_000
    root_tol: float = 1e-12
    merge_tol: float = 1e-9
    window_margin: float = 1e-12
    threshold_band: float = 1e-9
    pole_guard: float = 1e-13
    unwrap_fraction: float = 1e-3
    match_tol: float = 1e-10
    jump_tol: float = 1e-8
    state_tol: float = 1e-6
    quad_tol: float = 1e-10
    pairing_tol: float = 1e-9
    intertwining_tol: float = 1e-6
    slope_threshold: float = 1e-12
    q_samples: int = 101
    kink_clearance: float = 1e-3
    eta_minus_one: float = -0.25
    significant_digits: int = 17


SUSY_DEFAULTS = SusyDefaults()

# -----------------------------------------------------------------------------


def susy_function_header_print_data(function_name, kind, sector=None):
    """Logs a header of a function that generates data when it is running.

    :param function_name: name of the function that generates the data.
    :param kind: configuration being processed (i.e. DoubleEqual(2, 7)).
    :param sector: sector being processed, 0 (bosonic) or 1 (fermionic).
    :return: None -- The function logs a message and does not return a
     value.
    """

    logger.info('SUSY delta arrays data')
    logger.info(function_name)

    if sector is None:
        logger.info('Processing data for the configuration %s.', kind)
    else:
        logger.info('Processing data for the configuration %s in the sector'
                    ' %s.', kind, sector)

    return None

# -----------------------------------------------------------------------------


def susy_initial_message():
    """Logs the initial message with basic information.

    :return: None -- The function logs a message and does not return a value.
    """

    logger.info('###############################################')
    logger.info('Supersymmetric Dirac delta arrays on the line')
    logger.info('###############################################')
    logger.info('Units: hbar = 1, 2m = 1')

    return None

# -----------------------------------------------------------------------------


def principal_momentum(energy, floor):
    """Channel momentum sqrt(E - floor) on the principal branch.

    Above the floor the momentum is real and nonnegative, below it is
    i * sqrt(floor - E) with a nonnegative root.

    :param energy: energy or array of energies.
    :param floor: floor of the zone.
    :return: complex or array of complex -- the momentum.
    """

    diff = np.asarray(energy, dtype=float) - floor
    root = np.sqrt(np.abs(diff))
    momentum = np.where(diff >= 0, root + 0j, 1j * root)

    if momentum.ndim == 0:
        return complex(momentum)

    return momentum

# -----------------------------------------------------------------------------


def merge_close(values, tol=SUSY_DEFAULTS.merge_tol):
    """Sorts the values and merges the ones closer than tol.

    :param values: iterable of real numbers.
    :param tol: merging distance.
    :return: list -- sorted values without duplicates.
    """

    merged = []
    for value in sorted(values):
        if merged and abs(value - merged[-1]) < tol:
            continue
        merged.append(value)

    return merged

# -----------------------------------------------------------------------------


def scan_roots(residual, lower, upper, samples=SUSY_DEFAULTS.scan_samples,
               tol=SUSY_DEFAULTS.root_tol, merge_tol=SUSY_DEFAULTS.merge_tol):
    """Finds the real roots of a residual inside [lower, upper].

    The residual is sampled on a uniform grid, every sign change is
    bracketed and refined with Brent's method. Non finite samples are
    skipped, which splits the bracket around them. A sign change across a
    pole is rejected when the residual at the refined point is not small
    compared with the bracket ends.

    :param residual: callable accepting numpy arrays and floats.
    :param lower: lower end of the window.
    :param upper: upper end of the window.
    :param samples: number of grid points.
    :param tol: relative tolerance of the refinement.
    :param merge_tol: distance below which two roots are the same root.
    :return: list -- sorted roots.
    """

    if upper <= lower:
        return []

    grid = np.linspace(lower, upper, samples)
    with np.errstate(all='ignore'):
        values = np.asarray(residual(grid), dtype=float)

    finite = np.isfinite(values)
    if not finite.all():
        logger.debug('%d singular scan points skipped',
                     int((~finite).sum()))

    roots = list(grid[finite & (values == 0.0)])

    left = values[:-1]
    right = values[1:]
    brackets = np.nonzero(finite[:-1] & finite[1:] & (left * right < 0))[0]

    for idx in brackets:
        x_lo, x_hi = grid[idx], grid[idx + 1]
        root = optimize.brentq(residual, x_lo, x_hi,
                               xtol=tol * max(1.0, abs(x_lo)) * 1e-2,
                               rtol=max(tol, 4 * np.finfo(float).eps))
        scale = max(abs(values[idx]), abs(values[idx + 1]))
        if abs(residual(root)) > 1e-3 * scale + 1e-300:
            logger.debug('Sign change at %g rejected as a pole', root)
            continue
        roots.append(root)

    return merge_close(roots, merge_tol)

# -----------------------------------------------------------------------------


def to_jsonable(value):
    """Converts numpy scalars, arrays and complex numbers to JSON values.

    NaN and infinities become null.

    :param value: value to convert.
    :return: JSON serializable value.
    """

    if isinstance(value, dict):
        return {str(key): to_jsonable(val) for key, val in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(val) for val in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': to_jsonable(float(value.real)),
                'im': to_jsonable(float(value.imag))}
    if isinstance(value, (float, np.floating)):
        return float(value) if np.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)

    return value

# -----------------------------------------------------------------------------


def susy_save_data(function_name, data, path=None, fmt='json'):
    """Saves computed data in JSON or CSV files.

    Saves the data generated in the functions of the susy_algorithms
    modules. A pandas DataFrame is written as CSV, any other value as JSON.
    Without a path the data goes to the standard output.

    :param function_name: name of the function that generates the data.
    :param data: data to be saved, a DataFrame or a JSON serializable value.
    :param path: output file, None for the standard output.
    :param fmt: 'json' or 'csv'.
    :return: None -- The function saves the data and does not return a
     value.
    """

    if fmt == 'csv':
        frame = data if isinstance(data, pd.DataFrame) \
            else pd.DataFrame(data)
        text = frame.to_csv(
            index=False,
            float_format=f'%.{SUSY_DEFAULTS.significant_digits}g')
    else:
        text = json.dumps(to_jsonable(data), indent=2, allow_nan=False) \
            + '\n'

    if path is None:
        sys.stdout.write(text)
    else:
        folder = os.path.dirname(os.path.abspath(path))
        if not os.path.isdir(folder):
            try:
                os.makedirs(folder)
                logger.info('Folder to save data created')
            except FileExistsError:
                logger.info('Folder exists. The folder was not created')

        with open(path, 'w') as out:
            out.write(text)

    logger.info('%s data saved', function_name)

    return None

# -----------------------------------------------------------------------------


def main():
    """The main function of the script.

    The main function is used to test the functions in the script.

    :return: None.
    """

    logging.basicConfig(level=logging.INFO)
    susy_initial_message()
    roots = scan_roots(np.sin, 1.0, 10.0)
    logger.info('Roots of sin in [1, 10]: %s', roots)

    return None

# -----------------------------------------------------------------------------


if __name__ == '__main__':
    main()
