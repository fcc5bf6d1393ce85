#
# Copyright (c) 2026 The csfsim developers
#
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice, this
#    list of conditions and the following disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its contributors
#    may be used to endorse or promote products derived from this software
#    without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
#

import csv
import math

import numpy as np
import pytest
import yaml

import csf
from csfsim import load_config, run_command
from csfsim.Commands import EXIT_BLOWUP, EXIT_ERROR, EXIT_OK, Experiment
from csfsim.Reporting import (
    format_table, format_value, read_diagnostics, write_trajectory_csv,
    write_trajectory_dat)
from csfsim.UpwindSolver import Trajectory

def _write(tmp_path, mode, **sections):
    doc = {'mode': mode, 'output': {'directory': str(tmp_path / 'out')}}
    doc.update(sections)
    path = tmp_path / 'run.yaml'
    with open(path, 'w') as fp:
        yaml.safe_dump(doc, fp)
    return path

def _rows(path):
    with open(path, newline = '') as fp:
        return list(csv.DictReader(fp))

def _diagnostics(tmp_path):
    return read_diagnostics(tmp_path / 'out' / 'diagnostics.txt')

#
# Reporting
#

def test_csv_layout(tmp_path):
    traj = Trajectory(
        times = np.array([0., .1]),
        z     = np.array([0., .5, 1.]),
        u     = np.array([[0., 1. / 3, 0.], [0., .25, 0.]]),
        eta   = np.zeros((2, 3)),
        p     = np.ones((2, 3)))
    path = write_trajectory_csv(traj, tmp_path / 't.csv')

    raw = path.read_bytes()
    assert b'\r\n' not in raw
    lines = raw.decode().splitlines()
    assert lines[0] == 't,z,u,eta,p'
    assert len(lines) == 7
    assert lines[2].split(',')[2] == '0.33333333333333331'
    assert float(lines[2].split(',')[2]) == 1. / 3

def test_dat_layout(tmp_path):
    traj = Trajectory(
        times = np.array([0., .1]),
        z     = np.array([0., .5, 1.]),
        u     = np.array([[0., 1. / 3, 0.], [0., .25, 0.]]),
        eta   = np.zeros((2, 3)),
        p     = np.ones((2, 3)))
    path  = write_trajectory_dat(traj, tmp_path / 't.dat')
    lines = path.read_text().splitlines()

    assert lines[0] == '# t z u eta p'
    assert len(lines) == 8
    assert lines[4] == ''
    assert lines[2].split()[2] == '0.33333333333333331'

    data = np.loadtxt(path)
    assert data.shape == (6, 5)
    np.testing.assert_array_equal(data[3:, 0], .1)

def test_format_value():
    assert format_value(math.inf) == 'inf'
    assert format_value(math.nan) == 'nan'
    assert format_value(True) == 'yes'
    assert format_value(3) == '3'
    assert format_value(.1) == '0.1'

def test_format_table():
    table = format_table(('a', 'bb'), [(1, 2.5)]).splitlines()
    assert len(table) == 3
    assert table[1] == '-  ---'

#
# Commands
#

def test_simulate_completes(tmp_path):
    path = _write(tmp_path, 'simulate',
        params = {'preset': 'desk'},
        grid   = {'n_z': 101, 'dt': 1e-3, 't_end': .2, 'snapshot_stride': 50},
        ic     = {'preset': 'sine4'})

    assert run_command(load_config(path)) == EXIT_OK

    rows  = _rows(tmp_path / 'out' / 'trajectory.csv')
    last  = max(float(r['t']) for r in rows)
    final = [r for r in rows if float(r['t']) == last]
    assert last == pytest.approx(.2)
    assert len(final) == 101
    assert (tmp_path / 'out' / 'trajectory.dat').exists()

    diag = _diagnostics(tmp_path)
    assert diag['status'] == 'completed'
    assert diag['steps'] == '200'
    assert diag['admissibility'] == 'GlobalExpected'
    assert diag['predicted_blowup_time'] == 'inf'

def test_simulate_reports_blowup(tmp_path):
    path = _write(tmp_path, 'simulate',
        params = {'preset': 'desk-weak'},
        grid   = {'n_z': 201, 'dt': 1e-3, 't_end': 1., 'snapshot_stride': 50},
        ic     = {'preset': 'negexp'},
        output = {'directory': str(tmp_path / 'out'), 'formats': ['csv']})

    assert run_command(load_config(path)) == EXIT_BLOWUP

    diag = _diagnostics(tmp_path)
    assert diag['status'] == 'blowup'
    assert math.isfinite(float(diag['blowup_time']))
    assert diag['admissibility'] == 'BlowupExpected'
    assert not (tmp_path / 'out' / 'trajectory.dat').exists()

def test_zero_final_time(tmp_path):
    path   = _write(tmp_path, 'simulate',
        grid = {'n_z': 51, 'dt': 1e-3, 't_end': 0.},
        ic   = {'preset': 'sine4'})
    config = load_config(path)

    assert run_command(config) == EXIT_OK

    ic   = Experiment(config).initial_data()
    rows = _rows(tmp_path / 'out' / 'trajectory.csv')
    assert len(rows) == 51
    assert all(float(r['t']) == 0. for r in rows)
    np.testing.assert_array_equal([float(r['u']) for r in rows], ic.f)
    np.testing.assert_array_equal([float(r['p']) for r in rows], ic.s)

def test_simulate_with_picard(tmp_path):
    path = _write(tmp_path, 'simulate',
        grid   = {'n_z': 51, 'dt': 1e-3, 't_end': .1, 'snapshot_stride': 25},
        ic     = {'preset': 'sine2pi'},
        solver = {'scheme': 'picard'})

    assert run_command(load_config(path)) == EXIT_OK

    diag = _diagnostics(tmp_path)
    assert diag['status'] == 'completed'
    assert int(diag['picard_iterations']) >= 1
    assert diag['picard_ratios'] != 'n/a'

def test_blowup_analysis(tmp_path, capsys):
    path = _write(tmp_path, 'blowup',
        params = {'preset': 'desk-weak'},
        ic     = {'preset': 'negexp'})

    assert run_command(load_config(path)) == EXIT_OK

    out  = capsys.readouterr().out
    diag = _diagnostics(tmp_path)
    assert 'BlowupExpected' in out
    assert 'RK4 slope blow-up' in out
    assert 'Riccati start error' in out
    assert float(diag['predicted_blowup_time']) == pytest.approx(
        2 * math.log(math.e / (math.e - .5)), rel = 1e-6)

def test_blowup_analysis_without_blowup(tmp_path, capsys):
    path = _write(tmp_path, 'blowup', ic = {'preset': 'sine4'})

    assert run_command(load_config(path)) == EXIT_OK
    assert _diagnostics(tmp_path)['predicted_blowup_time'] == 'inf'
    assert 'RK4' not in capsys.readouterr().out

def test_periodic(tmp_path, capsys):
    path = _write(tmp_path, 'periodic',
        grid     = {'n_z': 51, 'dt': 1e-3},
        periodic = {'deltas': [1e-3], 'period_end': .1, 'samples': 20})

    assert run_command(load_config(path)) == EXIT_OK
    assert 'sup_deviation' in capsys.readouterr().out
    diag = _diagnostics(tmp_path)
    assert float(diag['residual_periodic']) < 1e-10
    assert diag['residual_eta'] == 'nan'

def test_check(tmp_path, capsys):
    path = _write(tmp_path, 'check', grid = {'n_z': 101}, ic = {'preset': 'sine4'})

    assert run_command(load_config(path)) == EXIT_OK

    lines = capsys.readouterr().out.splitlines()
    assert any(line.startswith('u_left') and line.endswith('PASS') for line in lines)
    assert lines[-1].startswith('initial_pressure_ode')

def test_compare(tmp_path, capsys):
    path = _write(tmp_path, 'compare',
        grid = {'n_z': 51, 'dt': 1e-3, 't_end': .1, 'snapshot_stride': 20},
        ic   = {'preset': 'sine2pi'})

    assert run_command(load_config(path)) == EXIT_OK

    out  = capsys.readouterr().out
    diag = _diagnostics(tmp_path)
    assert 'Linf(u)' in out
    assert diag['mode'] == 'compare'
    assert int(diag['picard_iterations']) >= 1

#
# Command line
#

def test_main_runs_mode_from_command_line(tmp_path):
    path = _write(tmp_path, 'simulate', grid = {'n_z': 101}, ic = {'preset': 'sine4'})
    assert csf.main(['check', '--config', str(path), '--quiet']) == EXIT_OK
    assert not (tmp_path / 'out' / 'trajectory.csv').exists()

def test_main_bad_configuration(tmp_path, capsys):
    path = tmp_path / 'bad.yaml'
    path.write_text('grid:\n  n_z: 11\n')

    assert csf.main(['simulate', '--config', str(path)]) == EXIT_ERROR
    assert 'mode' in capsys.readouterr().err

def test_main_missing_file(tmp_path):
    assert csf.main(['simulate', '--config', str(tmp_path / 'none.yaml')]) == EXIT_ERROR

def test_main_unknown_mode(tmp_path):
    path = _write(tmp_path, 'simulate')
    assert csf.main(['dance', '--config', str(path)]) == EXIT_ERROR
