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
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .BoundaryTraces import BoundaryTraces
from .Forcing import ChoroidForcing
from .Grid import Grid, sobolev_proxy
from .InitialData import InitialData
from .Production import default_periodic_production
from .UpwindSolver import BlowupMonitor, UpwindSolver

logger = logging.getLogger(__name__)

PERIODIC_F0_TOL = 1e-12

@dataclass
class PeriodicSolution:
    eta_bar:     object
    u_bar:       object
    p_bar:       object
    period:      float
    eta_bar_dt:  object = None
    eta_bar_dtt: object = None
    production:  object = None

@dataclass
class StabilityResult:
    delta:           float
    sup_deviation:   float
    bound_satisfied: bool
    response:        float = math.nan     # sup_deviation / delta
    unstable:        bool  = False

def build_periodic(params, production = None):
    """Space-independent periodic solution driven by the choroid forcing and
    a periodic production F with F(0) = 0."""
    prod = production or default_periodic_production(params)

    if abs(float(prod.F(0.))) > PERIODIC_F0_TOL:
        raise ValueError(f'periodic production must start at zero (F(0) = {float(prod.F(0.)):g})')
    if not prod.is_periodic():
        logger.warning('production %s is not periodic; the solution inherits its drift',
            type(prod).__name__)

    coef    = params.coefficients
    choroid = ChoroidForcing(params)
    abar    = params.alpha_bar
    w       = params.omega
    A       = params.area
    alpha   = coef.alpha
    kt      = coef.k_tilde
    kp      = coef.kappa
    base    = -2 * math.pi / w

    def eta_bar(t):
        return base - choroid.displacement(t) + choroid.rest_offset() + prod.F(t)

    def eta_bar_dt(t):
        return -choroid.velocity(t) + prod.rate(t)

    def eta_bar_dtt(t):
        return -choroid.acceleration(t) + prod.rate_dt(t)

    def u_bar(t):
        return np.zeros_like(np.asarray(t, dtype = float))

    def p_bar(t):
        t  = np.asarray(t, dtype = float)
        p1 = w * t - .5 * np.pi
        p2 = 2 * w * t - .5 * np.pi

        return ((abar * alpha * w ** 2 - kp * abar) / A * np.sin(p1)
                - (4 * abar * alpha * w ** 2 - kp * abar) / (2 * A) * np.cos(p2)
                - kt * abar * w / A * (np.cos(p1) + np.sin(p2))
                + kp / A * prod.F(t)
                + kt / A * prod.rate(t)
                + alpha / A * prod.rate_dt(t)
                - 2 * math.pi * kp / (A * w)
                - abar * kp / A
                + params.p_tissue)

    return PeriodicSolution(
        eta_bar     = eta_bar,
        u_bar       = u_bar,
        p_bar       = p_bar,
        period      = 2 * math.pi / w,
        eta_bar_dt  = eta_bar_dt,
        eta_bar_dtt = eta_bar_dtt,
        production  = prod)

def periodic_initial_pressure(params):
    """P_bar(0) in its closed form."""
    coef = params.coefficients
    abar = params.alpha_bar
    w    = params.omega
    A    = params.area
    return ((coef.k_tilde * abar * w - abar * coef.alpha * w ** 2) / A
            - 2 * math.pi * coef.kappa / (A * w)
            + params.p_tissue)

def residual(sol, params, t_samples):
    """Largest absolute residual of the space-independent system at the
    sampled times. The displacement equation is divided by A."""
    coef    = params.coefficients
    choroid = ChoroidForcing(params)
    t       = np.asarray(t_samples, dtype = float)

    r_eta = sol.eta_bar_dt(t) + choroid.velocity(t) + sol.u_bar(t) - sol.production.rate(t)
    r_p   = ((coef.alpha * sol.eta_bar_dtt(t)
              + coef.k_tilde * sol.eta_bar_dt(t)
              + coef.kappa * sol.eta_bar(t)) / params.area
             - sol.p_bar(t) + params.p_tissue)

    # the velocity vanishes and the pressure is uniform in space
    r_u = coef.beta * sol.u_bar(t)

    return float(max(np.max(np.abs(r_eta)), np.max(np.abs(r_p)), np.max(np.abs(r_u))))

def perturbation_profile(z, length):
    phi = np.sin(np.pi * z / length)
    return phi / np.sqrt(np.mean(phi ** 2))

def stability_experiment(delta, params, grid, T = None, production = None, bound = None):
    """Runs the coupled solver from the periodic state with velocity
    perturbed by delta * phi; the displacement perturbation is the balanced
    one, so the initial pressure stays finite."""
    sol   = build_periodic(params, production)
    T     = sol.period if T is None else T
    grid  = Grid(grid.n_z, grid.dt, T, grid.length)
    phi   = perturbation_profile(grid.z, grid.length)
    eta0  = float(sol.eta_bar(0.))

    ic = InitialData.build(params, grid, delta * phi, g = 'balanced', g0 = eta0)
    bt = BoundaryTraces(params, ic.g[0], ic.g[-1], sol.production)

    solver = UpwindSolver(params, grid, bt, sol.production, BlowupMonitor())
    traj, diag = solver.run(ic)

    dz  = grid.dz
    sup = 0.
    for i in range(len(traj)):
        t, u, eta, p = traj.snapshot(i)
        dev = (sobolev_proxy(eta - sol.eta_bar(t), dz)
               + sobolev_proxy(p - sol.p_bar(t), dz)
               + sobolev_proxy(u - sol.u_bar(t), dz))
        sup = max(sup, dev)

    if diag.blew_up:
        logger.warning('perturbation of size %g blows up at t = %g', delta, diag.blowup_time)
        sup = math.inf

    response = sup / delta if delta > 0 else math.nan
    if bound is None:
        satisfied = math.isfinite(sup)
    else:
        satisfied = sup <= bound

    return StabilityResult(
        delta           = delta,
        sup_deviation   = sup,
        bound_satisfied = satisfied,
        response        = response,
        unstable        = diag.blew_up)

def worker_count():
    try:
        n = int(os.environ.get('CSF_THREADS', '0'))
    except ValueError:
        n = 0
    return n if n > 0 else None

def stability_table(deltas, params, grid, T = None, production = None):
    with ThreadPoolExecutor(max_workers = worker_count()) as pool:
        jobs = [pool.submit(stability_experiment, d, params, grid, T, production)
                for d in deltas]
        return [job.result() for job in jobs]
