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
from pathlib import Path

import numpy as np

TRAJECTORY_COLUMNS = ('t', 'z', 'u', 'eta', 'p')

def fmt(x):
    return format(float(x), '.17g')

def _rows(traj):
    for i in range(len(traj)):
        t, u, eta, p = traj.snapshot(i)
        for j, z in enumerate(traj.z):
            yield (t, z, u[j], eta[j], p[j])

def write_trajectory_csv(traj, path):
    """One row per (snapshot, node), 17 significant digits."""
    path = Path(path)
    with open(path, 'w', newline = '') as fp:
        writer = csv.writer(fp, lineterminator = '\n')
        writer.writerow(TRAJECTORY_COLUMNS)
        for row in _rows(traj):
            writer.writerow([fmt(x) for x in row])
    return path

def write_trajectory_dat(traj, path):
    """gnuplot data: one block per snapshot, blocks separated by a blank line."""
    path = Path(path)
    with open(path, 'w', newline = '') as fp:
        for i in range(len(traj)):
            t, u, eta, p = traj.snapshot(i)
            block = np.column_stack((np.full_like(traj.z, t), traj.z, u, eta, p))
            if i > 0:
                fp.write('\n')
            np.savetxt(
                fp, block,
                fmt    = '%.17g',
                header = ' '.join(TRAJECTORY_COLUMNS) if i == 0 else '')
    return path

def format_value(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return f'{float(value):.10g}'
    return str(value)

def diagnostics_lines(diag):
    return [f'{key}: {format_value(value)}' for key, value in diag.items()]

def write_diagnostics(diag, path):
    path = Path(path)
    with open(path, 'w', newline = '') as fp:
        fp.write('\n'.join(diagnostics_lines(diag)) + '\n')
    return path

def read_diagnostics(path):
    out = {}
    with open(path, 'r') as fp:
        for line in fp:
            line = line.rstrip('\n')
            if not line:
                continue
            key, _, value = line.partition(': ')
            out[key] = value
    return out

def write_outputs(traj, diag, directory, formats = ('csv', 'dat')):
    directory = Path(directory)
    directory.mkdir(parents = True, exist_ok = True)

    written = []
    if traj is not None:
        if 'csv' in formats:
            written.append(write_trajectory_csv(traj, directory / 'trajectory.csv'))
        if 'dat' in formats:
            written.append(write_trajectory_dat(traj, directory / 'trajectory.dat'))
    written.append(write_diagnostics(diag, directory / 'diagnostics.txt'))

    return written

def format_table(header, rows):
    """Fixed-width text table for terminal reports."""
    cells  = [[str(h) for h in header]] + [[format_value(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines  = []
    for k, row in enumerate(cells):
        lines.append('  '.join(c.rjust(w) for c, w in zip(row, widths)))
        if k == 0:
            lines.append('  '.join('-' * w for w in widths))
    return '\n'.join(lines)
