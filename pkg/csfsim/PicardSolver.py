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
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .Exceptions import CflViolation, GridMismatch, NotContracting
from .Forcing import ChoroidForcing
from .Grid import Grid, d_dz, upwind_dz
from .Production import ConstantProduction

logger = logging.getLogger(__name__)

PICARD_TOLERANCE      = 1e-8
PICARD_MAX_ITERATIONS = 50
PICARD_DIVERGING_RUN  = 3

@dataclass
class IterationState:
    n:        int
    u_n:      np.ndarray      # (time, space)
    eta_n:    np.ndarray
    p_n:      np.ndarray
    diff_sup: float = np.inf

@dataclass
class PicardResult:
    state:     IterationState
    times:     np.ndarray
    z:         np.ndarray
    ratios:    list = field(default_factory = list)
    diffs:     list = field(default_factory = list)
    converged: bool = False

def _production(params, production):
    return production or ConstantProduction(params.coefficients.q_tilde)

def _check(u_n, times, g):
    u_n = np.asarray(u_n, dtype = float)
    if u_n.ndim != 2 or u_n.shape[0] != len(times):
        raise GridMismatch('u_n time levels', len(times), u_n.shape[0] if u_n.ndim else 0)
    if u_n.shape[1] != len(g):
        raise GridMismatch('u_n nodes', len(g), u_n.shape[1])
    return u_n

def _time_integral(u_n, times):
    return cumulative_trapezoid(u_n, times, axis = 0, initial = 0.)

def eta_update(u_n, g, params, times, production = None):
    """eta^{n+1} = g - int_0^t u^n - a(t) + a(0) + F(t)."""
    times   = np.asarray(times, dtype = float)
    g       = np.asarray(g, dtype = float)
    u_n     = _check(u_n, times, g)
    choroid = ChoroidForcing(params)
    prod    = _production(params, production)
    tt      = times[:, None]

    return (g[None, :]
            - _time_integral(u_n, times)
            - choroid.displacement(tt)
            + choroid.rest_offset()
            + prod.F(tt))

def pressure_update(u_n, g, params, times, production = None):
    """Pressure from the displacement equation with eta^{n+1} substituted
    and its time derivatives taken through u^n."""
    times   = np.asarray(times, dtype = float)
    g       = np.asarray(g, dtype = float)
    u_n     = _check(u_n, times, g)
    coef    = params.coefficients
    choroid = ChoroidForcing(params)
    prod    = _production(params, production)
    tt      = times[:, None]

    if len(times) >= 3:
        u_t = np.gradient(u_n, times, axis = 0, edge_order = 2)
    elif len(times) == 2:
        u_t = np.gradient(u_n, times, axis = 0)
    else:
        u_t = np.zeros_like(u_n)

    eta    = eta_update(u_n, g, params, times, prod)
    eta_t  = prod.rate(tt) - choroid.velocity(tt) - u_n
    eta_tt = prod.rate_dt(tt) - choroid.acceleration(tt) - u_t

    return params.p_tissue + (
        coef.alpha * eta_tt + coef.k_tilde * eta_t + coef.kappa * eta) / params.area

def velocity_update(u_n, p_next, f, params, times, dz):
    """Linear transport for u^{n+1} with u^n frozen as the advecting speed:
    first-order upwind on the sign of u^n, forward Euler in time, zero data
    at both walls."""
    times  = np.asarray(times, dtype = float)
    f      = np.asarray(f, dtype = float)
    u_n    = _check(u_n, times, f)
    p_next = _check(p_next, times, f)

    if len(times) > 1:
        dt  = float(np.max(np.diff(times)))
        cfl = float(np.max(np.abs(u_n))) * dt / dz
        if cfl >= 1:
            raise CflViolation(cfl)

    rho  = params.rho
    damp = params.coefficients.beta / rho
    p_z  = d_dz(p_next, dz, axis = 1)

    u       = np.empty_like(u_n)
    u[0]    = f
    u[0, 0] = u[0, -1] = 0.

    for k in range(len(times) - 1):
        h     = times[k + 1] - times[k]
        a     = u_n[k]
        rhs   = -a * upwind_dz(u[k], a, dz) - p_z[k] / rho - damp * u[k]
        u[k + 1] = u[k] + h * rhs
        u[k + 1, 0] = u[k + 1, -1] = 0.

    return u

def iterate(
        f,
        g,
        params,
        T,
        grid,
        tol        = PICARD_TOLERANCE,
        n_max      = PICARD_MAX_ITERATIONS,
        production = None):
    if tol <= 0:
        raise ValueError('tolerance must be positive')

    f     = grid.check('f', np.asarray(f, dtype = float))
    g     = grid.check('g', np.asarray(g, dtype = float))
    times = Grid(grid.n_z, grid.dt, T, grid.length).times()
    dz    = grid.dz
    u     = np.tile(f, (len(times), 1))

    ratios = []
    diffs  = []
    state  = IterationState(0, u, None, None)
    ok     = False

    for n in range(1, n_max + 1):
        eta   = eta_update(u, g, params, times, production)
        p     = pressure_update(u, g, params, times, production)
        u_new = velocity_update(u, p, f, params, times, dz)

        diff = float(np.max(np.abs(u_new - u)))
        if diffs and diffs[-1] > 0:
            ratios.append(diff / diffs[-1])
        diffs.append(diff)

        logger.debug('Picard iteration %d: sup diff %.3e', n, diff)

        u     = u_new
        state = IterationState(n, u, eta, p, diff)

        if diff < tol:
            ok = True
            break

        if len(ratios) >= PICARD_DIVERGING_RUN and all(
                r > 1 for r in ratios[-PICARD_DIVERGING_RUN:]):
            raise NotContracting(ratios[-PICARD_DIVERGING_RUN:])

    if not ok:
        logger.warning('Picard iteration stopped after %d iterations (diff %.3e)', n_max, diff)

    # Fields consistent with the last velocity
    state.eta_n = eta_update(u, g, params, times, production)
    state.p_n   = pressure_update(u, g, params, times, production)

    return PicardResult(
        state     = state,
        times     = times,
        z         = grid.z.copy(),
        ratios    = ratios,
        diffs     = diffs,
        converged = ok)
