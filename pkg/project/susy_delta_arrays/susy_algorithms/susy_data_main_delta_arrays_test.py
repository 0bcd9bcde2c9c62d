'''SUSY delta arrays command line tests.

.. moduleauthor:: Juan Camilo Henao Londono <www.github.com/juanhenao21>
'''

# -----------------------------------------------------------------------------
# Modules

from io import StringIO
import json

import numpy as np
import pandas as pd
import pytest

import susy_data_main_delta_arrays as main
import susy_data_model_delta_arrays as model
import susy_data_scattering_delta_arrays as scattering
from susy_data_tools_delta_arrays import SusyConfigurationError, SusyPoleError

# -----------------------------------------------------------------------------

DOUBLE_EQUAL = {'kind': 'double_equal', 'alpha': 2.0, 'a': 7.0}

# -----------------------------------------------------------------------------


def test_bound_pairs_the_sectors(config_file, capsys):

    code = main.run(['bound', '--config', config_file(DOUBLE_EQUAL)])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(data['singlets']) == 1
    energies = sorted(state['energy'] for state in data['states']
                      if state['energy'] > 0)
    assert energies[0] == pytest.approx(0.0469, abs=2e-3)
    assert len(data['pairs']) == len(energies) // 2


def test_bound_single_sector(config_file, capsys):

    code = main.run(['bound', '--config', config_file(DOUBLE_EQUAL),
                     '--sector', '0', '--anti-bound'])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data['pairs'] == []
    assert [state['kind'] for state in data['states']
            if state['energy'] == 0] == ['anti_bound']


def test_bound_without_wells(config_file, capsys):

    path = config_file({'kind': 'delta_step', 'mu': -2.0, 'g': 1.0})
    code = main.run(['bound', '--config', path, '--non-susy'])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert [state['energy'] for state in data['states']] \
        == pytest.approx([-0.5625])


def test_bands(capsys):

    code = main.run(['bands', '--alpha', '3', '--a', '1'])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(data['propagating']) == 4
    assert data['non_propagating']['exists_upper_edge']
    assert data['non_propagating']['a_critical'] == pytest.approx(2 / 3)


def test_bands_curve_file(tmp_path, capsys):

    path = tmp_path / 'g.csv'
    code = main.run(['bands', '--alpha', '3', '--a', '1', '--k-samples',
                     '50', '--csv', str(path)])
    capsys.readouterr()
    assert code == 0
    curve = pd.read_csv(path)
    assert list(curve.columns) == ['k', 'g']
    assert len(curve) == 50


def test_scatter_free_particle(config_file, capsys):

    code = main.run(['scatter', '--config', config_file({'kind': 'free'}),
                     '--e-min', '1', '--e-max', '4', '--e-samples', '4'])
    frame = pd.read_csv(StringIO(capsys.readouterr().out))
    assert code == 0
    assert len(frame) == 4
    assert np.allclose(frame['sigma_r_re'], 1.0)
    assert np.allclose(frame['rho_r_re'], 0.0)
    assert np.allclose(frame['rho_r_im'], 0.0)


def test_scatter_json_format(config_file, capsys):

    code = main.run(['--format', 'json', 'scatter', '--config',
                     config_file(DOUBLE_EQUAL), '--e-min', '4.5', '--e-max',
                     '6', '--e-samples', '3'])
    rows = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(rows) == 3
    assert all(row['flux_residual'] < 1e-12 for row in rows)


def test_witten(config_file, capsys):

    code = main.run(['witten', '--config', config_file(DOUBLE_EQUAL),
                     '--t-list', '0.1', '0.01', '0.001', '0.0001'])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert {'z0', 'z1', 'continuum', 'index', 'shifted_index',
            'susy_broken'} <= set(data)
    assert data['index'] == pytest.approx(0.0, abs=1e-4)
    assert data['shifted_index'] == 0


def test_zero_mode_csv(config_file, capsys):

    code = main.run(['--format', 'csv', 'zero-mode', '--config',
                     config_file(DOUBLE_EQUAL), '--sector', '1', '--x-samples',
                     '21'])
    frame = pd.read_csv(StringIO(capsys.readouterr().out))
    assert code == 0
    assert list(frame.columns) == ['x', 'psi']
    assert frame['psi'].max() == pytest.approx(1 / np.sqrt(14.5), rel=1e-6)


def test_zero_mode_json(config_file, capsys):

    code = main.run(['zero-mode', '--config', config_file(DOUBLE_EQUAL)])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert not data['normalizable']
    assert data['points'] == [-7.0, 7.0]


def test_output_file(config_file, tmp_path, capsys):

    path = tmp_path / 'results' / 'witten.json'
    code = main.run(['--out', str(path), 'witten', '--config',
                     config_file(DOUBLE_EQUAL)])
    assert code == 0
    assert capsys.readouterr().out == ''
    assert json.loads(path.read_text())['z1'] == 1


@pytest.mark.parametrize('argv', [
    ['transmit'],
    ['bound'],
    ['bands', '--alpha', '3'],
])
def test_usage_errors(argv, capsys):

    assert main.run(argv) == 2
    capsys.readouterr()


def test_missing_configuration_file(tmp_path, capsys):

    code = main.run(['bound', '--config', str(tmp_path / 'missing.json')])
    assert code == 2
    assert 'cannot read' in capsys.readouterr().err


def test_invalid_configuration(config_file, capsys):

    path = config_file({'kind': 'square_well', 'a': 1.0})
    assert main.run(['witten', '--config', path]) == 2
    assert 'unknown configuration kind' in capsys.readouterr().err


def test_malformed_json(tmp_path, capsys):

    path = tmp_path / 'broken.json'
    path.write_text('{"kind": ')
    assert main.run(['witten', '--config', str(path)]) == 2
    assert 'malformed JSON' in capsys.readouterr().err


def test_comb_has_no_scattering(config_file, capsys):

    path = config_file({'kind': 'alternating_comb', 'alpha': 3.0, 'a': 1.0})
    assert main.run(['scatter', '--config', path]) == 2
    capsys.readouterr()


def test_run_config_round_trip():

    cfg = main.RunConfig(command='witten', config=model.DoubleEqual(2.0, 7.0),
                         t_values=(0.1, 0.01), verify_samples=(10, 2, 3))
    assert main.RunConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) \
        == cfg


def test_run_config_validation():

    with pytest.raises(SusyConfigurationError):
        main.RunConfig(command='scatter', energy_grid=(0.0, 1.0, 1))
    with pytest.raises(SusyConfigurationError):
        main.RunConfig(command='scatter', fmt='xml')
    with pytest.raises(SusyConfigurationError):
        main.RunConfig(command='scatter', threads=0)
    with pytest.raises(SusyConfigurationError):
        main.RunConfig(command='verify', verify_samples=(0, 1, 1))


def test_run_config_from_arguments(config_file):

    args = main.build_parser().parse_args(
        ['--threads', '2', 'scatter', '--config', config_file(DOUBLE_EQUAL),
         '--sector', '1'])
    cfg = main.run_config_from_args(args)
    assert cfg.config == model.DoubleEqual(2.0, 7.0)
    assert cfg.sector == '1'
    assert cfg.fmt == 'csv'
    assert cfg.threads == 2


def test_verify_suite_reduced():

    report = main.verify_suite(seed=3, amplitude_samples=12,
                               pairing_samples=3, bound_samples=3)
    checks = {item['name']: item for item in report['checks']}
    for name in ('oracle_bound_states', 'triple_alternating_threshold',
                 'monodromy_dispersion', 'band_count', 'band_edges',
                 'critical_width', 'witten_continuum',
                 'witten_extrapolation', 'comb_zero_modes'):
        assert checks[name]['passed'], name
    assert report['passed'] == all(item['passed']
                                   for item in report['checks'])
    assert report['samples'] == {'amplitudes': 12, 'pairing': 3,
                                 'bound_states': 3}


def test_verify_suite_default_size():

    report = main.verify_suite()
    failed = [item['name'] for item in report['checks']
              if not item['passed']]
    assert failed == []
    assert report['passed']
    assert report['seed'] == 0
    assert report['samples'] == {'amplitudes': 1000, 'pairing': 50,
                                 'bound_states': 20}


def test_verify_sample_flags():

    args = main.build_parser().parse_args(
        ['--seed', '4', 'verify', '--amplitude-samples', '30',
         '--pairing-samples', '5'])
    cfg = main.run_config_from_args(args)
    assert cfg.seed == 4
    assert cfg.verify_samples == (30, 5, main.VERIFY_SAMPLES[2])


def test_bound_lists_anti_bound_states_apart(config_file, capsys):

    code = main.run(['bound', '--config', config_file(DOUBLE_EQUAL),
                     '--anti-bound'])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data['pairs'] != []
    assert len(data['singlets']) == 1
    assert len(data['anti_bound']) == 1
    state = data['anti_bound'][0]
    assert state['energy'] == 0
    assert state['sector'] == 0
    assert state['kind'] == 'anti_bound'


def test_scatter_json_pole_rows_are_null(config_file, capsys,
                                         monkeypatch):

    original = scattering.amplitudes_for

    def amplitudes_for(kind, sector, energy):
        if energy == 5.25:
            raise SusyPoleError(f'pole at E = {energy}')
        return original(kind, sector, energy)

    monkeypatch.setattr(scattering, 'amplitudes_for', amplitudes_for)
    code = main.run(['--format', 'json', 'scatter', '--config',
                     config_file(DOUBLE_EQUAL), '--e-min', '4.5', '--e-max',
                     '6', '--e-samples', '3'])
    text = capsys.readouterr().out
    rows = json.loads(text)
    assert code == 0
    assert 'NaN' not in text
    assert rows[1]['E'] == 5.25
    assert all(rows[1][name] is None for name in rows[1] if name != 'E')
    assert rows[0]['flux_residual'] < 1e-12
