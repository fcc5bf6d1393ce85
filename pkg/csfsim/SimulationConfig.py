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

from abc import ABC, abstractmethod

import yaml
from yaml.loader import SafeLoader
from parse import parse
from astropy import units as u

from .Exceptions import ParseError, UnknownKey, UnitError
from .Grid import Grid, GRID_DEFAULT_DT, GRID_DEFAULT_NZ
from .ModelParameters import preset_params
from .Presets import make_displacement, make_profile

RUN_MODES = ('simulate', 'blowup', 'periodic', 'check', 'compare')

# SI unit of each physical field, and the unit assumed for bare numbers
# when the parameter block declares clinical units
PARAM_UNITS = {
    'rho':          ('kg / m3',   None),
    'mu':           ('Pa s',      None),
    'r_lumen':      ('m',         None),
    'delta_tissue': ('m',         None),
    'area':         ('m2',        'mm2'),
    'k_e':          ('N / m',     None),
    'k_d':          ('N s / m',   None),
    'q_p':          ('m3 / s',    'cm3 / min'),
    'p_tissue':     ('Pa',        'mmHg'),
    'alpha_bar':    ('m',         None),
    'omega':        ('rad / s',   None),
    'length':       ('m',         None),
}

def _unit(text):
    # Clinical names such as mmHg live in the CDS catalogue
    try:
        return u.Unit(text)
    except ValueError:
        return u.Unit(text, format = 'cds')

def to_si(field, value, clinical = False):
    """Plain numbers are SI (or the clinical unit of the field); strings
    may carry a unit, as in "0.32 cm3/min" or "10 mmHg"."""
    target, clinical_unit = PARAM_UNITS[field]

    if isinstance(value, bool):
        raise UnitError(field, 'expected a number')

    if isinstance(value, (int, float)):
        if clinical and clinical_unit is not None:
            return float((value * _unit(clinical_unit)).to(_unit(target)).value)
        return float(value)

    if not isinstance(value, str):
        raise UnitError(field, f'unexpected value {value!r}')

    text = value.strip()
    try:
        return to_si(field, float(text), clinical)
    except ValueError:
        pass

    result = parse('{value:g} {unit}', text)
    if result is None:
        raise UnitError(field, f'cannot read `{text}\' as "value unit"')

    try:
        quantity = result['value'] * _unit(result['unit'].strip())
        return float(quantity.to(_unit(target)).value)
    except (ValueError, u.UnitsError) as e:
        raise UnitError(field, str(e))

def _number(section, key, value, kind = float):
    if isinstance(value, bool) and kind is not bool:
        raise ParseError(f'{section}.{key}: expected a number')
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ParseError(f'{section}.{key}: cannot read {value!r}')

class SerializableConfig(ABC):
    section = ''

    def __init__(self):
        super().__init__()
        self._cache = {}

    @abstractmethod
    def save(self):
        pass

    @abstractmethod
    def load(self, dict):
        pass

    def save_param(self, attr):
        self._cache[attr] = getattr(self, attr)

    def load_from_dict(self, attr, dict):
        if dict is None:
            dict = self._cache

        if attr in dict:
            setattr(self, attr, dict[attr])

    def load_all(self, dict):
        if dict is None:
            return
        if not isinstance(dict, type({})):
            raise ParseError(f'section `{self.section}\' must be a mapping')

        for key in dict.keys():
            if not isinstance(key, str) or key.startswith('_') or key not in vars(self):
                raise UnknownKey(f'{self.section}.{key}' if self.section else key)
            self.load_from_dict(key, dict)

    def as_dict(self):
        return self._cache.copy()

    def save_to_file(self, file):
        self.save()

        with open(file, 'w') as fp:
            yaml.dump(self._cache, fp, default_flow_style = False)

    def load_from_file(self, file):
        with open(file, 'r') as fp:
            try:
                data = yaml.load(fp, Loader = SafeLoader)
            except yaml.YAMLError as e:
                mark = getattr(e, 'problem_mark', None)
                line = mark.line + 1 if mark is not None else None
                raise ParseError(getattr(e, 'problem', None) or str(e), line)

        if data is None:
            data = {}
        if not isinstance(data, type({})):
            raise ParseError('configuration must be a mapping', 1)

        self._cache = data
        self.load(self._cache)

class ParamsConfig(SerializableConfig):
    section = 'params'

    def __init__(self):
        super().__init__()

        self.preset = 'desk'
        self.units  = 'si'

        for name in PARAM_UNITS:
            setattr(self, name, None)

    def save(self):
        self._cache = {}
        self.save_param('preset')
        self.save_param('units')
        for name in PARAM_UNITS:
            if getattr(self, name) is not None:
                self.save_param(name)

    def load(self, dict):
        self.load_all(dict)
        if self.units not in ('si', 'clinical'):
            raise ParseError(f'params.units must be `si\' or `clinical\' (got {self.units!r})')

    def physical_params(self):
        try:
            base = preset_params(self.preset)
        except ValueError as e:
            raise ParseError(str(e))

        clinical  = self.units == 'clinical'
        overrides = {
            name: to_si(name, getattr(self, name), clinical)
            for name in PARAM_UNITS if getattr(self, name) is not None}

        return base.with_changes(**overrides)

class GridConfig(SerializableConfig):
    section = 'grid'

    def __init__(self):
        super().__init__()

        self.n_z             = GRID_DEFAULT_NZ
        self.dt              = GRID_DEFAULT_DT
        self.t_end           = 1.
        self.snapshot_stride = 20

    def save(self):
        self.save_param('n_z')
        self.save_param('dt')
        self.save_param('t_end')
        self.save_param('snapshot_stride')

    def load(self, dict):
        self.load_all(dict)

        self.n_z             = _number('grid', 'n_z', self.n_z, int)
        self.dt              = _number('grid', 'dt', self.dt)
        self.t_end           = _number('grid', 't_end', self.t_end)
        self.snapshot_stride = _number('grid', 'snapshot_stride', self.snapshot_stride, int)

    def grid(self, length):
        try:
            return Grid(self.n_z, self.dt, self.t_end, length)
        except ValueError as e:
            raise ParseError(str(e))

class ICConfig(SerializableConfig):
    section = 'ic'

    def __init__(self):
        super().__init__()

        self.preset       = 'sine4'
        self.amplitude    = None
        self.expression   = None
        self.g            = 'balanced'
        self.g0           = 0.
        self.g_expression = None

    def save(self):
        self._cache = {}
        self.save_param('preset')
        self.save_param('g')
        self.save_param('g0')
        for key in ('amplitude', 'expression', 'g_expression'):
            if getattr(self, key) is not None:
                self.save_param(key)

    def load(self, dict):
        self.load_all(dict)
        self.g0 = _number('ic', 'g0', self.g0)
        if self.amplitude is not None:
            self.amplitude = _number('ic', 'amplitude', self.amplitude)

    def profile(self, length):
        try:
            return make_profile(self.preset, self.amplitude, length, self.expression)
        except ValueError as e:
            raise ParseError(str(e))

    def displacement(self, length):
        try:
            return make_displacement(self.g, self.g_expression, length)
        except ValueError as e:
            raise ParseError(str(e))

class SolverConfig(SerializableConfig):
    section = 'solver'

    def __init__(self):
        super().__init__()

        self.scheme          = 'fd'
        self.pressure_force  = True
        self.picard_tol      = 1e-8
        self.picard_max_iter = 50

    def save(self):
        self.save_param('scheme')
        self.save_param('pressure_force')
        self.save_param('picard_tol')
        self.save_param('picard_max_iter')

    def load(self, dict):
        self.load_all(dict)

        if self.scheme not in ('fd', 'picard'):
            raise ParseError(f'solver.scheme must be `fd\' or `picard\' (got {self.scheme!r})')

        self.picard_tol      = _number('solver', 'picard_tol', self.picard_tol)
        self.picard_max_iter = _number('solver', 'picard_max_iter', self.picard_max_iter, int)

class BlowupConfig(SerializableConfig):
    section = 'blowup'

    def __init__(self):
        super().__init__()

        self.grad_threshold = 1e4
        self.grad_growth    = 1.5
        self.u_threshold    = 1e6
        self.fan_points     = 401
        self.cross_check    = False

    def save(self):
        self.save_param('grad_threshold')
        self.save_param('grad_growth')
        self.save_param('u_threshold')
        self.save_param('fan_points')
        self.save_param('cross_check')

    def load(self, dict):
        self.load_all(dict)

        self.grad_threshold = _number('blowup', 'grad_threshold', self.grad_threshold)
        self.grad_growth    = _number('blowup', 'grad_growth', self.grad_growth)
        self.u_threshold    = _number('blowup', 'u_threshold', self.u_threshold)
        self.fan_points     = _number('blowup', 'fan_points', self.fan_points, int)

        if not self.grad_growth > 1:
            raise ParseError(f'blowup.grad_growth must exceed 1 (got {self.grad_growth!r})')

class PeriodicConfig(SerializableConfig):
    section = 'periodic'

    def __init__(self):
        super().__init__()

        self.deltas     = [1e-4, 1e-3, 1e-2]
        self.period_end = None
        self.production = None
        self.samples    = 100

    def save(self):
        self._cache = {}
        self.save_param('deltas')
        self.save_param('samples')
        for key in ('period_end', 'production'):
            if getattr(self, key) is not None:
                self.save_param(key)

    def load(self, dict):
        self.load_all(dict)

        if not isinstance(self.deltas, list):
            raise ParseError('periodic.deltas must be a list')
        self.deltas  = [_number('periodic', 'deltas', d) for d in self.deltas]
        self.samples = _number('periodic', 'samples', self.samples, int)
        if self.period_end is not None:
            self.period_end = _number('periodic', 'period_end', self.period_end)

class OutputConfig(SerializableConfig):
    section = 'output'

    def __init__(self):
        super().__init__()

        self.directory = 'out'
        self.formats   = ['csv', 'dat']

    def save(self):
        self.save_param('directory')
        self.save_param('formats')

    def load(self, dict):
        self.load_all(dict)

        if isinstance(self.formats, str):
            self.formats = [self.formats]
        for fmt in self.formats:
            if fmt not in ('csv', 'dat'):
                raise ParseError(f'unknown output format `{fmt}\'')

class RunConfig(SerializableConfig):
    def __init__(self):
        super().__init__()

        self.mode     = None
        self.params   = ParamsConfig()
        self.grid     = GridConfig()
        self.ic       = ICConfig()
        self.solver   = SolverConfig()
        self.blowup   = BlowupConfig()
        self.periodic = PeriodicConfig()
        self.output   = OutputConfig()

    def sections(self):
        return {
            'params':   self.params,
            'grid':     self.grid,
            'ic':       self.ic,
            'solver':   self.solver,
            'blowup':   self.blowup,
            'periodic': self.periodic,
            'output':   self.output,
        }

    def save(self):
        self._cache = {'mode': self.mode}
        for name, section in self.sections().items():
            section.save()
            self._cache[name] = section.as_dict()

    def load(self, dict):
        for key in dict.keys():
            if key != 'mode' and key not in self.sections():
                raise UnknownKey(key)

        if 'mode' not in dict:
            raise ParseError('missing `mode\' key', 1)

        self.mode = dict['mode']
        if self.mode not in RUN_MODES:
            raise ParseError(f'unknown mode `{self.mode}\'')

        for name, section in self.sections().items():
            if name in dict:
                section.load(dict[name])

    def physical_params(self):
        return self.params.physical_params()

def load_config(path):
    config = RunConfig()
    config.load_from_file(path)
    return config

def write_config(config, path):
    config.save_to_file(path)
