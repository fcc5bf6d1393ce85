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

import collections
import logging
import math
import time
from dataclasses import dataclass, replace

import numpy as np

from .Exceptions import CflViolation
from .Forcing import ChoroidForcing
from .Grid import d_dz, upwind_dz, system_residual
from .Production import ConstantProduction
from .RunDiagnostics import RunDiagnostics

logger = logging.getLogger(__name__)

BLOWUP_GRAD_THRESHOLD = 1e4
BLOWUP_GRAD_GROWTH    = 1.5
BLOWUP_U_THRESHOLD    = 1e6

@dataclass
class State:
    t:          float
    u:          np.ndarray
    eta:        np.ndarray
    p:          np.ndarray
    eta_t_prev: np.ndarray

    def copy(self):
        return replace(
            self,
            u          = self.u.copy(),
            eta        = self.eta.copy(),
            p          = self.p.copy(),
            eta_t_prev = self.eta_t_prev.copy())

@dataclass
class BlowupDetected:
    t_blow:   float
    max_grad: float
    reason:   str = 'gradient'

@dataclass
class StepOutcome:
    state:  State
    blowup: BlowupDetected = None

    @property
    def blew_up(self):
        return self.blowup is not None

def compressive_slope(u, dz):
    """Steepest negative slope between interior nodes; the differences next
    to the pinned walls are left out."""
    inner = np.diff(u[1:-1])
    if len(inner) == 0:
        return 0.
    return max(0., -float(np.min(inner)) / dz)

class BlowupMonitor:
    def __init__(
            self,
            grad_threshold = BLOWUP_GRAD_THRESHOLD,
            grad_growth    = BLOWUP_GRAD_GROWTH,
            u_threshold    = BLOWUP_U_THRESHOLD):
        self.grad_threshold = grad_threshold
        self.grad_growth    = grad_growth
        self.u_threshold    = u_threshold
        self.reference      = math.inf

    def calibrate(self, f, dz, beta_over_rho):
        """Relative criterion: slopes grow past grad_growth times the larger
        of the steepest initial compression and the damping rate."""
        self.reference = max(compressive_slope(f, dz), beta_over_rho)

    def limit(self):
        return min(self.grad_threshold, self.grad_growth * self.reference)

    def inspect(self, state, dz):
        fields = (state.u, state.eta, state.p)
        if not all(np.all(np.isfinite(x)) for x in fields):
            return BlowupDetected(state.t, math.inf, 'non-finite')

        if np.max(np.abs(state.u)) > self.u_threshold:
            return BlowupDetected(state.t, compressive_slope(state.u, dz), 'magnitude')

        slope = compressive_slope(state.u, dz)
        if slope > self.limit():
            return BlowupDetected(state.t, slope, 'gradient')

        return None

@dataclass
class Trajectory:
    times: np.ndarray
    z:     np.ndarray
    u:     np.ndarray
    eta:   np.ndarray
    p:     np.ndarray

    def __len__(self):
        return len(self.times)

    def snapshot(self, i):
        return self.times[i], self.u[i], self.eta[i], self.p[i]

class UpwindSolver:
    """Forward Euler on the coupled system: first-order upwind advection,
    centered pressure gradient, tissue acceleration from the backward
    difference of the displacement rate."""

    def __init__(
            self,
            params,
            grid,
            bt,
            production     = None,
            monitor        = None,
            pressure_force = True,
            stride         = 1):
        coef = params.coefficients

        self.params         = params
        self.grid           = grid
        self.bt             = bt
        self.coef           = coef
        self.choroid        = ChoroidForcing(params)
        self.production     = production or ConstantProduction(coef.q_tilde)
        self.monitor        = monitor or BlowupMonitor()
        self.pressure_force = pressure_force
        self.stride         = max(1, int(stride))

        inertia = coef.alpha / (params.rho * params.area)
        if pressure_force and inertia >= grid.dz:
            logger.warning(
                'tissue inertia alpha / (rho A) = %g is not below dz = %g; '
                'the lagged tissue acceleration is unstable on this grid',
                inertia, grid.dz)

    def drive(self, t):
        return float(self.production.rate(t) - self.choroid.velocity(t))

    def drive_dt(self, t):
        return float(self.production.rate_dt(t) - self.choroid.acceleration(t))

    def source_integral(self, t):
        return float(self.production.F(t) - self.choroid.displacement(t))

    def initial_state(self, ic):
        return State(
            t          = 0.,
            u          = ic.f.copy(),
            eta        = ic.g.copy(),
            p          = ic.s.copy(),
            eta_t_prev = self.drive(0.) - ic.f)

    def cfl(self, u):
        return float(np.max(np.abs(u))) * self.grid.dt / self.grid.dz

    def check_cfl(self, u):
        cfl = self.cfl(u)
        if cfl >= 1:
            raise CflViolation(cfl)
        return cfl

    def step(self, state):
        self.check_cfl(state.u)

        params = self.params
        coef   = self.coef
        dt     = self.grid.dt
        dz     = self.grid.dz
        t0     = state.t
        t1     = t0 + dt
        u      = state.u

        # velocity first, driven by the pressure of the current level;
        # eta_t and the new pressure then follow from the new velocity
        rhs = -u * upwind_dz(u, u, dz) - coef.beta / params.rho * u
        if self.pressure_force:
            rhs -= d_dz(state.p, dz) / params.rho

        u_new = u + dt * rhs
        u_new[0] = u_new[-1] = 0.

        eta_new = (state.eta
                   + (self.source_integral(t1) - self.source_integral(t0))
                   - dt * u)

        eta_t  = self.drive(t1) - u_new
        eta_tt = (self.drive_dt(t1)
                  + ((eta_t - self.drive(t1)) - (state.eta_t_prev - self.drive(t0))) / dt)

        p_new = params.p_tissue + (
            coef.alpha * eta_tt + coef.k_tilde * eta_t + coef.kappa * eta_new) / params.area

        eta_new[0]  = self.bt.eta_left(t1)
        eta_new[-1] = self.bt.eta_right(t1)
        p_new[0]    = self.bt.p_left(t1)
        p_new[-1]   = self.bt.p_right(t1)

        new = State(t = t1, u = u_new, eta = eta_new, p = p_new, eta_t_prev = eta_t)
        return StepOutcome(new, self.monitor.inspect(new, dz))

    def run(self, ic, t_end = None):
        t_end   = self.grid.t_end if t_end is None else t_end
        n_steps = int(np.round(t_end / self.grid.dt))
        start   = time.perf_counter()

        self.monitor.calibrate(ic.f, self.grid.dz, self.params.beta_over_rho)

        state  = self.initial_state(ic)
        diag   = RunDiagnostics(cfl_max = self.check_cfl(state.u))
        recent = collections.deque([state], maxlen = 3)
        snaps  = [state]

        logger.info('running %d steps (dt = %g, n_z = %d)', n_steps, self.grid.dt, self.grid.n_z)

        for n in range(n_steps):
            outcome = self.step(state)
            state   = outcome.state
            recent.append(state)

            diag.steps        = n + 1
            diag.cfl_max      = max(diag.cfl_max, self.cfl(state.u))
            diag.max_gradient = max(diag.max_gradient, compressive_slope(state.u, self.grid.dz))

            if outcome.blew_up:
                diag.status      = 'blowup'
                diag.blowup_time = outcome.blowup.t_blow
                if math.isfinite(outcome.blowup.max_grad):
                    diag.max_gradient = max(diag.max_gradient, outcome.blowup.max_grad)
                logger.info('blow-up (%s) detected at t = %g, slope %g',
                    outcome.blowup.reason, outcome.blowup.t_blow, outcome.blowup.max_grad)
                snaps.append(state)
                break

            if (n + 1) % self.stride == 0 or n + 1 == n_steps:
                snaps.append(state)

        diag.t_final    = state.t
        diag.residuals  = self.final_residual(recent) if not diag.blew_up else {}
        diag.wall_clock = time.perf_counter() - start

        return self.trajectory(snaps), diag

    def final_residual(self, recent):
        if len(recent) < 3:
            return {}

        return system_residual(
            [s.t for s in recent],
            self.grid.z,
            [s.u for s in recent],
            [s.eta for s in recent],
            [s.p for s in recent],
            self.params,
            self.production,
            self.pressure_force)

    def trajectory(self, snaps):
        return Trajectory(
            times = np.array([s.t for s in snaps]),
            z     = self.grid.z.copy(),
            u     = np.array([s.u for s in snaps]),
            eta   = np.array([s.eta for s in snaps]),
            p     = np.array([s.p for s in snaps]))

def step(state, params, grid, bt, production = None, monitor = None, pressure_force = True):
    return UpwindSolver(params, grid, bt, production, monitor, pressure_force).step(state)

def run(ic, bt, params, grid, monitors = None, production = None, pressure_force = True, stride = 1):
    solver = UpwindSolver(params, grid, bt, production, monitors, pressure_force, stride)
    return solver.run(ic)
