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

import math
from dataclasses import dataclass, field

@dataclass
class RunDiagnostics:
    mode:                  str   = 'simulate'
    status:                str   = 'completed'
    t_final:               float = 0.
    steps:                 int   = 0
    cfl_max:               float = 0.
    max_gradient:          float = 0.
    blowup_time:           float = math.inf
    predicted_blowup_time: float = math.inf
    admissibility:         str   = ''
    residuals:             dict  = field(default_factory = dict)
    picard_ratios:         list  = field(default_factory = list)
    picard_iterations:     int   = 0
    wall_clock:            float = 0.

    @property
    def blew_up(self):
        return self.status == 'blowup'

    def merge(self, other):
        for key in ('picard_ratios', 'picard_iterations', 'admissibility'):
            value = getattr(other, key)
            if value:
                setattr(self, key, value)
        self.residuals.update(other.residuals)

    def items(self):
        """Stable report keys, in report order. Non-finite values are
        spelled out so they stay parseable."""
        out = [
            ('mode',                  self.mode),
            ('status',                self.status),
            ('t_final',               self.t_final),
            ('steps',                 self.steps),
            ('cfl_max',               self.cfl_max),
            ('max_gradient',          self.max_gradient),
            ('blowup_time',           self.blowup_time),
            ('predicted_blowup_time', self.predicted_blowup_time),
            ('admissibility',         self.admissibility or 'n/a'),
        ]

        for key in ('residual_u', 'residual_eta', 'residual_p', 'residual_periodic'):
            out.append((key, self.residuals.get(key, math.nan)))

        out.append(('picard_iterations', self.picard_iterations))
        out.append(('picard_ratios', ' '.join(f'{r:.6g}' for r in self.picard_ratios) or 'n/a'))
        out.append(('wall_clock', self.wall_clock))

        return out
