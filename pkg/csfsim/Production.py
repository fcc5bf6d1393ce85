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

import numpy as np
import sympy

class Production(ABC):
    """Cumulative CSF production per unit section, F(t), with F(0) = 0.
    The production term entering the displacement equation is F'(t)."""

    @abstractmethod
    def F(self, t):
        pass

    @abstractmethod
    def rate(self, t):
        pass

    @abstractmethod
    def rate_dt(self, t):
        pass

    def is_periodic(self):
        return False

class ConstantProduction(Production):
    def __init__(self, q_tilde):
        self.q_tilde = q_tilde

    def F(self, t):
        return self.q_tilde * np.asarray(t, dtype = float)

    def rate(self, t):
        return self.q_tilde * np.ones_like(np.asarray(t, dtype = float))

    def rate_dt(self, t):
        return np.zeros_like(np.asarray(t, dtype = float))

class SinusoidalProduction(Production):
    def __init__(self, q_tilde, omega):
        self.q_tilde = q_tilde
        self.omega   = omega

    def F(self, t):
        return self.q_tilde / self.omega * np.sin(self.omega * np.asarray(t, dtype = float))

    def rate(self, t):
        return self.q_tilde * np.cos(self.omega * np.asarray(t, dtype = float))

    def rate_dt(self, t):
        return -self.q_tilde * self.omega * np.sin(self.omega * np.asarray(t, dtype = float))

    def is_periodic(self):
        return True

class ExpressionProduction(Production):
    """F(t) given as a text expression in `t`. The symbols `q` (Q_p / A)
    and `omega` are bound to the parameter set."""

    def __init__(self, expression, params, periodic = True):
        t, q, w = sympy.symbols('t q omega')
        try:
            expr = sympy.sympify(expression, locals = {'t': t, 'q': q, 'omega': w})
        except (sympy.SympifyError, SyntaxError) as e:
            raise ValueError(f'invalid production expression `{expression}\': {e}')

        unknown = expr.free_symbols - {t, q, w}
        if unknown:
            names = ', '.join(sorted(str(s) for s in unknown))
            raise ValueError(f'production expression uses unknown symbols: {names}')

        expr = expr.subs({q: params.q_p / params.area, w: params.omega})

        self.expression = expression
        self.periodic   = periodic
        self._F         = sympy.lambdify(t, expr, 'numpy')
        self._rate      = sympy.lambdify(t, sympy.diff(expr, t), 'numpy')
        self._rate_dt   = sympy.lambdify(t, sympy.diff(expr, t, 2), 'numpy')

    def _eval(self, fn, t):
        t = np.asarray(t, dtype = float)
        return np.broadcast_to(fn(t), t.shape).astype(float)

    def F(self, t):
        return self._eval(self._F, t)

    def rate(self, t):
        return self._eval(self._rate, t)

    def rate_dt(self, t):
        return self._eval(self._rate_dt, t)

    def is_periodic(self):
        return self.periodic

def default_periodic_production(params):
    return SinusoidalProduction(params.q_p / params.area, params.omega)

def production_F(t, params):
    F = default_periodic_production(params).F(t)
    return float(F) if np.ndim(F) == 0 else F
