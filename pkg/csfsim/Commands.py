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
import time
from pathlib import Path

import numpy as np

from .BoundaryTraces import BoundaryTraces
from .Characteristics import CharacteristicFan, scan_fan
from .Conditions import admissibility, check_compatibility
from .Grid import system_residual
from .InitialData import InitialData, ic_ode_residual
from .Periodic import build_periodic, residual as periodic_residual, stability_table
from .PicardSolver import iterate
from .Production import ConstantProduction, ExpressionProduction
from .Reporting import format_table, format_value, write_diagnostics, write_outputs
from .Riccati import initial_mismatch, riccati_integrate, riccati_setup
from .RunDiagnostics import RunDiagnostics
from .UpwindSolver import BlowupMonitor, Trajectory, UpwindSolver

logger = logging.getLogger(__name__)

EXIT_OK     = 0
EXIT_ERROR  = 1
EXIT_BLOWUP = 2

RUN_MODES_HELP = (
    'simulate: run the coupled solver; blowup: slope analysis along '
    'characteristics; periodic: periodic solution and its stability; '
    'check: corner compatibility of the initial data; compare: Picard '
    'against the finite-difference solver')

class Experiment:
    """Everything a command needs, resolved from a RunConfig."""

    def __init__(self, config, out = None):
        self.config  = config
        self.params  = config.physical_params()
        self.length  = self.params.length
        self.grid    = config.grid.grid(self.length)
        self.profile = config.ic.profile(self.length)
        self.out     = out if out is not None else config.output.directory

    def initial_data(self, grid = None):
        ic = self.config.ic
        return InitialData.build(
            self.params,
            grid or self.grid,
            self.profile,
            ic.displacement(self.length),
            ic.g0)

    def boundary_traces(self, ic, production = None):
        return BoundaryTraces(self.params, ic.g[0], ic.g[-1], production)

    def monitor(self):
        cfg = self.config.blowup
        return BlowupMonitor(cfg.grad_threshold, cfg.grad_growth, cfg.u_threshold)

    def fan(self):
        return CharacteristicFan.from_profile(
            self.profile,
            self.params.beta_over_rho,
            self.length,
            self.config.blowup.fan_points,
            self.profile.derivative)

    def periodic_production(self):
        expr = self.config.periodic.production
        if expr is None:
            return None
        return ExpressionProduction(expr, self.params)

def picard_trajectory(result, stride = 1):
    st    = result.state
    index = list(range(0, len(result.times), max(1, stride)))
    if index[-1] != len(result.times) - 1:
        index.append(len(result.times) - 1)

    return Trajectory(
        times = result.times[index],
        z     = result.z,
        u     = st.u_n[index],
        eta   = st.eta_n[index],
        p     = st.p_n[index])

def run_fd(exp, ic, stride = None):
    bt     = exp.boundary_traces(ic)
    solver = UpwindSolver(
        exp.params,
        exp.grid,
        bt,
        monitor        = exp.monitor(),
        pressure_force = exp.config.solver.pressure_force,
        stride         = exp.config.grid.snapshot_stride if stride is None else stride)

    return solver.run(ic)

def run_picard(exp, ic, stride = None):
    cfg    = exp.config.solver
    stride = exp.config.grid.snapshot_stride if stride is None else stride
    start  = time.perf_counter()

    if exp.grid.steps() == 0:
        traj = Trajectory(
            times = np.zeros(1),
            z     = exp.grid.z.copy(),
            u     = ic.f[None, :].copy(),
            eta   = ic.g[None, :].copy(),
            p     = ic.s[None, :].copy())
        return traj, RunDiagnostics(mode = 'simulate', wall_clock = time.perf_counter() - start)

    result = iterate(
        ic.f, ic.g, exp.params, exp.grid.t_end, exp.grid,
        tol = cfg.picard_tol, n_max = cfg.picard_max_iter)

    st   = result.state
    diag = RunDiagnostics(
        status            = 'completed' if result.converged else 'not-converged',
        t_final           = float(result.times[-1]),
        steps             = len(result.times) - 1,
        cfl_max           = float(np.max(np.abs(st.u_n))) * exp.grid.dt / exp.grid.dz,
        picard_ratios     = list(result.ratios),
        picard_iterations = st.n)

    if len(result.times) >= 3:
        diag.residuals = system_residual(
            result.times[-3:], result.z,
            st.u_n[-3:], st.eta_n[-3:], st.p_n[-3:],
            exp.params, ConstantProduction(exp.params.coefficients.q_tilde))

    diag.wall_clock = time.perf_counter() - start
    return picard_trajectory(result, stride), diag

def cmd_simulate(config, out = None):
    exp = Experiment(config, out)
    ic  = exp.initial_data()

    verdict   = admissibility(ic, exp.params)
    predicted = scan_fan(exp.fan()).min_blowup_time

    logger.info('admissibility: %s (min slope %g, threshold %g)',
        verdict.verdict, verdict.min_slope, verdict.threshold)

    if config.solver.scheme == 'picard':
        traj, diag = run_picard(exp, ic)
    else:
        traj, diag = run_fd(exp, ic)

    diag.mode                  = 'simulate'
    diag.admissibility         = str(verdict.verdict)
    diag.predicted_blowup_time = predicted

    write_outputs(traj, diag, exp.out, config.output.formats)

    if diag.blew_up:
        print(f'Blow-up detected at t = {format_value(diag.blowup_time)} '
              f'(predicted {format_value(predicted)})')
        return EXIT_BLOWUP

    print(f'Completed {diag.steps} steps up to t = {format_value(diag.t_final)}')
    return EXIT_OK

def cmd_blowup(config, out = None):
    exp     = Experiment(config, out)
    ic      = exp.initial_data()
    verdict = admissibility(ic, exp.params)
    report  = scan_fan(exp.fan())
    b       = exp.params.beta_over_rho

    print(f'Verdict:             {verdict.verdict}')
    print(f'Damping beta/rho:    {format_value(b)}')
    print(f'Min initial slope:   {format_value(verdict.min_slope)}')
    print(f'Criterion margin:    {format_value(report.criterion_margin)}')
    print(f'Sup norm:            {format_value(verdict.sup_norm)}')
    print(f'H^{verdict.k_max} norm:            {format_value(verdict.h_k_norm)}')
    print(f'Blowing-up feet:     {report.finite_count()} of {len(report.lambdas)}')
    print(f'Earliest blow-up:    {format_value(report.min_blowup_time)}')
    print(f'At foot point:       {format_value(report.argmin_lambda)}')

    diag = RunDiagnostics(
        mode                  = 'blowup',
        status                = 'analysis',
        admissibility         = str(verdict.verdict),
        predicted_blowup_time = report.min_blowup_time)

    if math.isfinite(report.min_blowup_time):
        # Slope ODE along the earliest characteristic, without pressure
        i     = int(np.argmin(report.times))
        w0    = float(exp.fan().fprime_vals[i])
        setup = riccati_setup(b, 0., w0)
        T     = report.min_blowup_time
        ode   = riccati_integrate(setup, w0, 2 * T, T / 200)
        if ode.diverged:
            print(f'RK4 slope blow-up:   {format_value(ode.t_blow)}')
        print(f'Riccati start error: {format_value(initial_mismatch(setup))}')

    if config.blowup.cross_check:
        _, run = run_fd(exp, ic)
        diag.steps        = run.steps
        diag.t_final      = run.t_final
        diag.cfl_max      = run.cfl_max
        diag.max_gradient = run.max_gradient
        diag.blowup_time  = run.blowup_time
        print(f'Simulated blow-up:   {format_value(run.blowup_time)}')

    write_diagnostics(diag, _outdir(exp) / 'diagnostics.txt')
    return EXIT_OK

def cmd_periodic(config, out = None):
    exp   = Experiment(config, out)
    cfg   = config.periodic
    prod  = exp.periodic_production()
    sol   = build_periodic(exp.params, prod)
    ts    = np.linspace(0., sol.period, cfg.samples)
    res   = periodic_residual(sol, exp.params, ts)

    print(f'Period:            {format_value(sol.period)}')
    print(f'Periodic residual: {res:.3e}')

    results = stability_table(cfg.deltas, exp.params, exp.grid, cfg.period_end, prod)
    rows    = [(r.delta, r.sup_deviation, r.response, r.bound_satisfied, r.unstable)
               for r in results]
    print(format_table(('delta', 'sup_deviation', 'response', 'bounded', 'unstable'), rows))

    diag = RunDiagnostics(mode = 'periodic', status = 'analysis')
    diag.residuals = {'residual_periodic': res}
    write_diagnostics(diag, _outdir(exp) / 'diagnostics.txt')
    return EXIT_OK

def cmd_check(config, out = None):
    exp    = Experiment(config, out)
    ic     = exp.initial_data()
    bt     = exp.boundary_traces(ic)
    report = check_compatibility(ic, bt, exp.params)

    for line in report.lines():
        print(line)

    ode = ic_ode_residual(exp.params, ic.s, ic.f, ic.g, exp.grid.z)
    print(f'initial_pressure_ode: {float(np.max(np.abs(ode))):.6e} INFO')

    return EXIT_OK if report.passed else EXIT_ERROR

def cmd_compare(config, out = None):
    exp = Experiment(config, out)
    ic  = exp.initial_data()

    fd, fd_diag = run_fd(exp, ic, stride = 1)
    pc, pc_diag = run_picard(exp, ic, stride = 1)

    n      = min(len(fd), len(pc))
    stride = max(1, config.grid.snapshot_stride)
    index  = list(range(0, n, stride))
    if index[-1] != n - 1:
        index.append(n - 1)

    rows = []
    for i in index:
        rows.append((
            pc.times[i],
            float(np.max(np.abs(fd.u[i] - pc.u[i]))),
            float(np.max(np.abs(fd.eta[i] - pc.eta[i]))),
            float(np.max(np.abs(fd.p[i] - pc.p[i])))))

    print(format_table(('t', 'Linf(u)', 'Linf(eta)', 'Linf(p)'), rows))

    fd_diag.mode = 'compare'
    fd_diag.merge(pc_diag)
    write_diagnostics(fd_diag, _outdir(exp) / 'diagnostics.txt')

    return EXIT_BLOWUP if fd_diag.blew_up else EXIT_OK

def _outdir(exp):
    path = Path(exp.out)
    path.mkdir(parents = True, exist_ok = True)
    return path

COMMANDS = {
    'simulate': cmd_simulate,
    'blowup':   cmd_blowup,
    'periodic': cmd_periodic,
    'check':    cmd_check,
    'compare':  cmd_compare,
}

def run_command(config, out = None):
    return COMMANDS[config.mode](config, out)
