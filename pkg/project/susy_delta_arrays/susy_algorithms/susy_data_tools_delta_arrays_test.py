'''SUSY delta arrays tools tests.

Tests of the shared helpers: momenta, root scanning and data saving.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

import json

import numpy as np
import pandas as pd
import pytest

import susy_data_tools_delta_arrays as tools

# -----------------------------------------------------------------------------


def test_principal_momentum_open_and_closed():

    assert tools.principal_momentum(5.0, 1.0) == pytest.approx(2.0)
    closed = tools.principal_momentum(1.0, 5.0)
    assert closed.real == 0
    assert closed.imag == pytest.approx(2.0)
    assert tools.principal_momentum(3.0, 3.0) == 0


def test_principal_momentum_array():

    momenta = tools.principal_momentum(np.array([0.0, 4.0]), 1.0)
    assert momenta[0] == pytest.approx(1j)
    assert momenta[1] == pytest.approx(np.sqrt(3.0))


def test_merge_close_removes_duplicates():

    assert tools.merge_close([2.0, 1.0, 1.0 + 1e-12, 3.0]) == [1.0, 2.0, 3.0]


def test_scan_roots_sine():

    roots = tools.scan_roots(np.sin, 0.5, 10.0, samples=500)
    assert roots == pytest.approx([np.pi, 2 * np.pi, 3 * np.pi], abs=1e-10)


def test_scan_roots_rejects_poles():

    roots = tools.scan_roots(np.tan, 1.0, 4.0, samples=301)
    assert roots == pytest.approx([np.pi], abs=1e-10)


def test_scan_roots_empty_window():

    assert tools.scan_roots(np.sin, 2.0, 1.0) == []


def test_to_jsonable_complex_and_numpy():

    data = tools.to_jsonable({'z': 1 + 2j, 'x': np.float64(0.5),
                              'n': np.int64(3), 'v': np.arange(2)})
    assert data == {'z': {'re': 1.0, 'im': 2.0}, 'x': 0.5, 'n': 3,
                    'v': [0, 1]}
    json.dumps(data)


def test_to_jsonable_non_finite_values_become_null():

    data = tools.to_jsonable({'nan': np.nan, 'inf': -np.inf,
                              'z': complex(np.nan, 1.0),
                              'row': [np.float64(np.inf), 2.0]})
    assert data == {'nan': None, 'inf': None, 'z': {'re': None, 'im': 1.0},
                    'row': [None, 2.0]}
    json.dumps(data, allow_nan=False)


def test_save_data_json_without_nan(capsys):

    tools.susy_save_data('nan', {'value': float('nan')})
    text = capsys.readouterr().out
    assert 'NaN' not in text
    assert json.loads(text) == {'value': None}


def test_save_data_json(tmp_path):

    path = tmp_path / 'out' / 'data.json'
    tools.susy_save_data('test', {'energy': np.float64(0.25)}, str(path))
    assert json.loads(path.read_text()) == {'energy': 0.25}


def test_save_data_csv_round_trip(tmp_path):

    path = tmp_path / 'data.csv'
    frame = pd.DataFrame({'k': [0.1, 1 / 3], 'g': [1.0, -0.5]})
    tools.susy_save_data('test', frame, str(path), 'csv')
    loaded = pd.read_csv(path)
    assert list(loaded.columns) == ['k', 'g']
    assert loaded['k'].tolist() == frame['k'].tolist()


def test_save_data_stdout(capsys):

    tools.susy_save_data('test', [1, 2])
    assert json.loads(capsys.readouterr().out) == [1, 2]


def test_exceptions_hierarchy():

    assert issubclass(tools.SusyConfigurationError, ValueError)
    assert issubclass(tools.SusyPoleError, ArithmeticError)
    assert issubclass(tools.SusyInconsistencyError, tools.SusyError)
