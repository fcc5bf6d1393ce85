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
from scipy.integrate import trapezoid

from .Exceptions import GridMismatch
from .Forcing import ChoroidForcing

GRID_DEFAULT_NZ = 201
GRID_DEFAULT_DT = 5e-3   # s

class Grid:
    def __init__(self, n_z = GRID_DEFAULT_NZ, dt = GRID_DEFAULT_DT, t_end = 1., length = 1.):
        if int(n_z) != n_z or n_z < 3:
            raise ValueError(f'grid needs at least 3 nodes (got {n_z})')
        if not np.isfinite(dt) or dt <= 0:
            raise ValueError(f'time step must be positive (got {dt})')
        if not np.isfinite(t_end) or t_end < 0:
            raise ValueError(f'final time must be non-negative (got {t_end})')
        if not np.isfinite(length) or length <= 0:
            raise ValueError(f'length must be positive (got {length})')

        self.n_z    = int(n_z)
        self.dt     = float(dt)
        self.t_end  = float(t_end)
        self.length = float(length)
        self.z      = np.linspace(0., self.length, self.n_z)
        self.dz     = self.length / (self.n_z - 1)

    def __repr__(self):
        return f'Grid(n_z={self.n_z}, dt={self.dt}, t_end={self.t_end}, length={self.length})'

    def steps(self):
        return int(np.round(self.t_end / self.dt))

    def times(self):
        return np.arange(self.steps() + 1) * self.dt

    def sample(self, fn):
        return np.asarray(fn(self.z), dtype = float) * np.ones(self.n_z)

    def check(self, what, values):
        values = np.asarray(values)
        if values.shape[-1] != self.n_z:
            raise GridMismatch(what, self.n_z, values.shape[-1])
        return values

    def refined(self, factor = 2):
        return Grid(
            n_z    = (self.n_z - 1) * factor + 1,
            dt     = self.dt / factor,
            t_end  = self.t_end,
            length = self.length)

#
# Discrete derivatives: centered in the interior, one-sided second order
# at the ends.
#

def d_dz(f, dz, axis = -1):
    return np.gradient(f, dz, axis = axis, edge_order = 2)

def d_dz_n(f, dz, order):
    for _ in range(order):
        f = d_dz(f, dz)
    return f

def upwind_dz(f, speed, dz):
    """First-order upwind derivative of f, biased against the sign of
    `speed` node by node."""
    back = np.empty_like(f)
    fwd  = np.empty_like(f)

    back[1:]  = (f[1:] - f[:-1]) / dz
    back[0]   = back[1]
    fwd[:-1]  = back[1:]
    fwd[-1]   = back[-1]

    return np.where(speed > 0, back, fwd)

def l2_norm(f, dz):
    return float(np.sqrt(trapezoid(np.asarray(f) ** 2, dx = dz)))

def hk_norm(f, dz, k_max = 2):
    """Discrete stand-in for the H^k norm: the largest L2 norm among f and
    its first k_max derivatives."""
    return max(l2_norm(d_dz_n(f, dz, j), dz) for j in range(k_max + 1))

def sobolev_proxy(f, dz):
    # L2 of f, f' and f''
    return sum(l2_norm(d_dz_n(f, dz, j), dz) for j in range(3))

def system_residual(times, z, U, E, P, params, production, pressure_force = True):
    """Plugs space-time samples (rows are time levels) into the three field
    equations and returns the largest absolute residual of each, measured
    away from the boundary rows and columns."""
    times = np.asarray(times, dtype = float)
    U, E, P = (np.asarray(x, dtype = float) for x in (U, E, P))

    if len(times) < 3:
        raise ValueError('residual needs at least three time levels')

    for name, field in (('u', U), ('eta', E), ('p', P)):
        if field.shape != (len(times), len(z)):
            raise GridMismatch(name, (len(times), len(z)), field.shape)

    coef    = params.coefficients
    choroid = ChoroidForcing(params)
    dz      = z[1] - z[0]
    tt      = times[:, None]

    E_t  = np.gradient(E, times, axis = 0, edge_order = 2)
    E_tt = np.gradient(E_t, times, axis = 0, edge_order = 2)
    U_t  = np.gradient(U, times, axis = 0, edge_order = 2)
    U_z  = d_dz(U, dz)
    P_z  = d_dz(P, dz) if pressure_force else 0.

    r_eta = E_t + choroid.velocity(tt) + U - production.rate(tt)
    r_p   = (coef.alpha * E_tt + coef.k_tilde * E_t + coef.kappa * E
             - params.area * P + params.area * params.p_tissue)
    r_u   = params.rho * U_t + params.rho * U * U_z + P_z + coef.beta * U

    inner = (slice(1, -1), slice(1, -1))
    return {
        'residual_u':   float(np.max(np.abs(r_u[inner]))),
        'residual_eta': float(np.max(np.abs(r_eta[inner]))),
        'residual_p':   float(np.max(np.abs(r_p[inner]))),
    }
