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

import logging

import numpy as np

from .Exceptions import GridMismatch
from .Grid import d_dz

logger = logging.getLogger(__name__)

# h(z) below this fraction of the size of its terms counts as uniform
UNIFORM_RHS_RTOL = 1e-10

def _ic_rhs_terms(z, params, f, g):
    coef = params.coefficients
    f    = np.asarray(f, dtype = float)
    g    = np.asarray(g, dtype = float)

    if f.shape != g.shape or f.shape != np.shape(z):
        raise GridMismatch('initial data', np.shape(z), (f.shape, g.shape))

    rho    = params.rho
    fprime = d_dz(f, z[1] - z[0])
    ratio  = rho / coef.alpha

    return [
        rho * params.alpha_bar * params.omega ** 2 * np.ones_like(f),
        -rho * f * fprime,
        -coef.beta * f,
        -ratio * (params.alpha_bar * coef.k_tilde * params.omega
                  + coef.k_tilde * coef.q_tilde
                  + params.area * params.p_tissue) * np.ones_like(f),
        ratio * coef.k_tilde * f,
        -ratio * coef.kappa * g,
    ]

def build_ic_rhs(z, params, f, g):
    """Right-hand side h(z) of the first-order ODE the initial pressure
    obeys, s' - (A rho / alpha) s = h."""
    return np.sum(_ic_rhs_terms(np.asarray(z, dtype = float), params, f, g), axis = 0)

def initial_pressure_origin(params, g0):
    """P(0, 0), fixed by the displacement equation at the corner."""
    coef = params.coefficients
    A    = params.area
    abar = params.alpha_bar
    w    = params.omega

    return (params.p_tissue
            - abar * coef.alpha * w ** 2 / A
            + coef.k_tilde * abar * w / A
            + coef.k_tilde * coef.q_tilde / A
            + coef.kappa * g0 / A)

def build_initial_pressure(params, f, g, z = None):
    """Initial pressure profile s(z).

    The variation-of-constants integral is rewritten by parts as

        s = -h / k + w,   w' - k w = h' / k,   w(0) = s(0) + h(0) / k

    with k = A rho / alpha, and w is integrated with the composite
    trapezoid rule using exact exponential weights. When f(0) = 0 the
    corner condition makes w(0) vanish identically, and a uniform h leaves
    w at zero, which keeps the profile finite for stiff k."""
    f = np.asarray(f, dtype = float)
    g = np.asarray(g, dtype = float)

    if z is None:
        z = np.linspace(0., params.length, len(f))
    z = np.asarray(z, dtype = float)

    coef  = params.coefficients
    k     = params.area * params.rho / coef.alpha
    dz    = z[1] - z[0]
    terms = _ic_rhs_terms(z, params, f, g)
    h     = np.sum(terms, axis = 0)

    if not np.all(np.isfinite(h)):
        raise ValueError('initial-pressure source h(z) has non-finite samples')

    scale = np.max(np.abs(terms))
    if np.ptp(h) <= UNIFORM_RHS_RTOL * scale:
        q = np.zeros_like(h)
    else:
        q = d_dz(h, dz) / k

    s0 = initial_pressure_origin(params, g[0])
    w0 = 0. if f[0] == 0 else s0 + h[0] / k

    decay = np.exp(k * dz)
    w     = np.empty_like(h)
    w[0]  = w0
    with np.errstate(over = 'ignore', invalid = 'ignore'):
        for j in range(len(z) - 1):
            w[j + 1] = decay * w[j] + .5 * dz * (decay * q[j] + q[j + 1])

    s    = -h / k + w
    s[0] = s0

    if not np.all(np.isfinite(s)):
        raise ValueError(
            f'initial pressure overflows (A rho / alpha = {k:g} 1/m); use a '
            'balanced initial displacement or a smaller tissue inertia')

    return s

def ic_ode_residual(params, s, f, g, z):
    """s' - (A rho / alpha) s - h on the grid."""
    coef = params.coefficients
    k    = params.area * params.rho / coef.alpha
    return d_dz(s, z[1] - z[0]) - k * s - build_ic_rhs(z, params, f, g)

def balanced_displacement(z, params, f, g0 = 0.):
    """Initial displacement that makes h(z) constant, so the initial pressure
    is uniform. Needs a positive spring constant."""
    coef = params.coefficients
    if coef.kappa <= 0:
        raise ValueError('balanced displacement needs k_e > 0')

    z   = np.asarray(z, dtype = float)
    f   = np.asarray(f, dtype = float)
    rho = params.rho
    x   = (-rho * f * d_dz(f, z[1] - z[0])
           - coef.beta * f
           + rho * coef.k_tilde / coef.alpha * f)

    return g0 + coef.alpha / (rho * coef.kappa) * (x - x[0])

class InitialData:
    def __init__(self, grid, f, g, s, profile = None):
        self.grid    = grid
        self.f       = grid.check('f', f)
        self.g       = grid.check('g', g)
        self.s       = grid.check('s', s)
        self.profile = profile    # analytic u0, when known

    @staticmethod
    def build(params, grid, f, g = 'balanced', g0 = 0.):
        """f and g may be callables of z or sampled arrays; g may also be
        'balanced' or 'constant' (g0 everywhere)."""
        profile = f if callable(f) else None
        f = grid.sample(f) if callable(f) else np.array(f, dtype = float)
        grid.check('f', f)

        wall_tol = 1e-12 * max(1., np.max(np.abs(f)))
        if abs(f[0]) > wall_tol or abs(f[-1]) > wall_tol:
            logger.warning(
                'initial velocity does not vanish at the walls '
                '(u0(0) = %g, u0(L) = %g); pinning both ends to zero', f[0], f[-1])
        f[0] = f[-1] = 0.

        if isinstance(g, str):
            if g == 'balanced':
                g = balanced_displacement(grid.z, params, f, g0)
            elif g == 'constant':
                g = np.full(grid.n_z, float(g0))
            else:
                raise ValueError(f'unknown displacement profile `{g}\'')
        elif callable(g):
            g = grid.sample(g)
        else:
            g = np.array(g, dtype = float)

        s = build_initial_pressure(params, f, g, grid.z)
        return InitialData(grid, f, g, s, profile)

    def fprime(self):
        return d_dz(self.f, self.grid.dz)
