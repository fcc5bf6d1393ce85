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
import sympy

class VelocityProfile:
    """Initial velocity u0(z) together with its derivative."""

    def __init__(self, name, fn, dfn):
        self.name = name
        self.fn   = fn
        self.dfn  = dfn

    def __call__(self, z):
        return self.fn(np.asarray(z, dtype = float))

    def derivative(self, z):
        return self.dfn(np.asarray(z, dtype = float))

def zero_profile(amplitude = 0., length = 1.):
    return VelocityProfile(
        'zero',
        lambda z: np.zeros_like(z),
        lambda z: np.zeros_like(z))

def sine_profile(amplitude = 4., length = 1.):
    k = np.pi / length
    return VelocityProfile(
        'sine4',
        lambda z: amplitude * np.sin(k * z),
        lambda z: amplitude * k * np.cos(k * z))

def sine2pi_profile(amplitude = .2, length = 1.):
    k = 2 * np.pi / length
    return VelocityProfile(
        'sine2pi',
        lambda z: amplitude * np.sin(k * z),
        lambda z: amplitude * k * np.cos(k * z))

def negexp_profile(amplitude = 1., length = 1.):
    return VelocityProfile(
        'negexp',
        lambda z: -amplitude * np.exp(z),
        lambda z: -amplitude * np.exp(z))

def expression_profile(expression, length = 1.):
    z    = sympy.Symbol('z')
    L    = sympy.Symbol('L')
    try:
        expr = sympy.sympify(expression, locals = {'z': z, 'L': L})
    except (sympy.SympifyError, SyntaxError) as e:
        raise ValueError(f'invalid profile expression `{expression}\': {e}')

    unknown = expr.free_symbols - {z, L}
    if unknown:
        names = ', '.join(sorted(str(s) for s in unknown))
        raise ValueError(f'profile expression uses unknown symbols: {names}')

    expr = expr.subs(L, length)
    fn   = sympy.lambdify(z, expr, 'numpy')
    dfn  = sympy.lambdify(z, sympy.diff(expr, z), 'numpy')

    def wrap(g):
        return lambda x: np.broadcast_to(g(x), np.shape(x)).astype(float)

    return VelocityProfile('custom', wrap(fn), wrap(dfn))

IC_PRESETS = {
    'zero':    (zero_profile,    0.),
    'sine4':   (sine_profile,    4.),
    'sine2pi': (sine2pi_profile, .2),
    'negexp':  (negexp_profile,  1.),
}

def make_profile(name, amplitude = None, length = 1., expression = None):
    if name == 'custom':
        if not expression:
            raise ValueError('custom initial velocity needs an expression')
        return expression_profile(expression, length)

    if name not in IC_PRESETS:
        raise ValueError(f'unknown initial-velocity preset `{name}\'')

    builder, default = IC_PRESETS[name]
    return builder(default if amplitude is None else amplitude, length)

def make_displacement(kind, expression = None, length = 1.):
    """'balanced', 'constant' or a custom expression in z."""
    if kind in ('balanced', 'constant'):
        return kind
    if kind == 'custom':
        if not expression:
            raise ValueError('custom initial displacement needs an expression')
        return expression_profile(expression, length)
    raise ValueError(f'unknown initial-displacement preset `{kind}\'')
