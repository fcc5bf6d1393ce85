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

import numpy as np

# Choroid plexus expansion over the cardiac cycle:
#
#   a(t) = abar * (1.3 + sin(w t - pi / 2) - cos(2 w t - pi / 2) / 2)
#
# All derivatives are analytic.

class ChoroidForcing:
    def __init__(self, params):
        self.alpha_bar = params.alpha_bar
        self.omega     = params.omega
        self.period    = 2 * np.pi / params.omega

    def phases(self, t):
        t = np.asarray(t, dtype = float)
        return self.omega * t - .5 * np.pi, 2 * self.omega * t - .5 * np.pi

    def displacement(self, t):
        p1, p2 = self.phases(t)
        return self.alpha_bar * (1.3 + np.sin(p1) - .5 * np.cos(p2))

    def velocity(self, t):
        p1, p2 = self.phases(t)
        w = self.omega
        return self.alpha_bar * (w * np.cos(p1) + w * np.sin(p2))

    def acceleration(self, t):
        p1, p2 = self.phases(t)
        w2 = self.omega ** 2
        return self.alpha_bar * (-w2 * np.sin(p1) + 2 * w2 * np.cos(p2))

    def rest_offset(self):
        # a(0), the level the displacement starts from
        return .3 * self.alpha_bar

def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x

def forcing(t, params):
    return _scalar(ChoroidForcing(params).displacement(t))

def forcing_dt(t, params):
    return _scalar(ChoroidForcing(params).velocity(t))

def forcing_dtt(t, params):
    return _scalar(ChoroidForcing(params).acceleration(t))
