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

from .Forcing import ChoroidForcing
from .Production import ConstantProduction

class BoundaryTraces:
    """Dirichlet data at both walls. The velocity vanishes there; the
    displacement follows the choroid forcing and the production, and the
    pressure is what the displacement equation gives for that motion."""

    def __init__(self, params, g_left, g_right, production = None):
        coef = params.coefficients

        self.params     = params
        self.g_left     = float(g_left)
        self.g_right    = float(g_right)
        self.choroid    = ChoroidForcing(params)
        self.production = production
        self.constant   = production is None or isinstance(production, ConstantProduction)

        if production is None:
            self.production = ConstantProduction(coef.q_tilde)

        self.alpha   = coef.alpha
        self.k_tilde = coef.k_tilde
        self.kappa   = coef.kappa
        self.q_tilde = coef.q_tilde

    def _eta(self, t, g):
        t = np.asarray(t, dtype = float)
        return (g
                - self.choroid.displacement(t)
                + self.choroid.rest_offset()
                + self.production.F(t))

    def _p_trig(self, t, g):
        # Constant production, written out term by term
        t     = np.asarray(t, dtype = float)
        abar  = self.params.alpha_bar
        w     = self.params.omega
        A     = self.params.area
        alpha = self.alpha
        kt    = self.k_tilde
        kp    = self.kappa
        p1    = w * t - .5 * np.pi
        p2    = 2 * w * t - .5 * np.pi

        return ((abar * alpha * w ** 2 - kp * abar) / A * np.sin(p1)
                + (kp * abar - 4 * abar * alpha * w ** 2) / (2 * A) * np.cos(p2)
                - abar * kt * w / A * (np.cos(p1) + np.sin(p2))
                + kp / A * g
                + (kt + kp * t) * self.q_tilde / A
                - kp * abar / A
                + self.params.p_tissue)

    def _p_general(self, t, g):
        t   = np.asarray(t, dtype = float)
        prd = self.production
        ch  = self.choroid

        eta_tt = prd.rate_dt(t) - ch.acceleration(t)
        eta_t  = prd.rate(t) - ch.velocity(t)

        return (self.params.p_tissue
                + (self.alpha * eta_tt
                   + self.k_tilde * eta_t
                   + self.kappa * self._eta(t, g)) / self.params.area)

    def _p(self, t, g):
        if self.constant:
            return self._p_trig(t, g)
        return self._p_general(t, g)

    def eta_left(self, t):
        return self._eta(t, self.g_left)

    def eta_right(self, t):
        return self._eta(t, self.g_right)

    def p_left(self, t):
        return self._p(t, self.g_left)

    def p_right(self, t):
        return self._p(t, self.g_right)

    def u_left(self, t):
        return np.zeros_like(np.asarray(t, dtype = float))

    u_right = u_left

def boundary_traces(params, g, production = None):
    g = np.asarray(g, dtype = float)
    return BoundaryTraces(params, g[0], g[-1], production)
