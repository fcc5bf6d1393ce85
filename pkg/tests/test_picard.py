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
import pytest

from csfsim import (
    BoundaryTraces, CflViolation, Grid, GridMismatch, InitialData, iterate)
from csfsim.Forcing import ChoroidForcing
from csfsim.Grid import system_residual
from csfsim.PicardSolver import (
    PICARD_TOLERANCE, eta_update, pressure_update, velocity_update)
from csfsim.Presets import make_profile
from csfsim.Production import ConstantProduction
from csfsim.UpwindSolver import run

def _fields(grid, t_end):
    times = Grid(grid.n_z, grid.dt, t_end, grid.length).times()
    zero  = np.zeros((len(times), grid.n_z))
    return times, zero

def test_eta_starts_at_displacement(desk):
    grid     = Grid(n_z = 21, dt = 1e-2)
    times, u = _fields(grid, .1)
    g        = .1 * np.cos(grid.z)
    eta      = eta_update(u + .3, g, desk, times)

    np.testing.assert_allclose(eta[0], g, atol = 1e-15)

def test_eta_without_flow(desk):
    params   = desk.with_changes(q_p = 0.)
    grid     = Grid(n_z = 21, dt = 1e-2)
    times, u = _fields(grid, .5)
    g        = .1 * np.cos(grid.z)
    eta      = eta_update(u, g, params, times)
    choroid  = ChoroidForcing(params)
    expect   = g[None, :] - choroid.displacement(times)[:, None] + .3 * params.alpha_bar

    np.testing.assert_allclose(eta, expect, atol = 1e-14)

def test_pressure_without_forcing(desk):
    params   = desk.with_changes(alpha_bar = 0., q_p = 0., p_tissue = 2.)
    grid     = Grid(n_z = 21, dt = 1e-2)
    times, u = _fields(grid, .5)
    g        = .1 * np.cos(grid.z)
    p        = pressure_update(u, g, params, times)
    expect   = params.coefficients.kappa / params.area * g + params.p_tissue

    np.testing.assert_allclose(p, np.broadcast_to(expect, p.shape), rtol = 1e-14)

def test_velocity_decays_without_transport(desk_unit):
    grid     = Grid(n_z = 41, dt = 1e-3)
    times, u = _fields(grid, 1.)
    f0       = .5 * np.sin(np.pi * grid.z)
    f0[-1]   = 0.
    p        = np.ones_like(u)
    u_next   = velocity_update(u, p, f0, desk_unit, times, grid.dz)

    np.testing.assert_allclose(u_next, f0[None, :] * np.exp(-times)[:, None], atol = 1e-3)

def test_velocity_stays_zero(desk):
    grid     = Grid(n_z = 41, dt = 1e-3)
    times, u = _fields(grid, .2)
    u_next   = velocity_update(u, np.ones_like(u), np.zeros(grid.n_z), desk, times, grid.dz)

    np.testing.assert_array_equal(u_next, 0.)

def test_velocity_cfl_guard(desk):
    grid     = Grid(n_z = 11, dt = 1e-2)
    times, u = _fields(grid, .1)
    with pytest.raises(CflViolation):
        velocity_update(u + 10., u, np.zeros(grid.n_z), desk, times, grid.dz)

def test_shape_check(desk):
    grid     = Grid(n_z = 11, dt = 1e-2)
    times, u = _fields(grid, .1)
    with pytest.raises(GridMismatch):
        eta_update(u[:, :-1], np.zeros(grid.n_z), desk, times)

def test_zero_problem_is_a_fixed_point(desk):
    params = desk.with_changes(alpha_bar = 0., q_p = 0.)
    grid   = Grid(n_z = 21, dt = 1e-2)
    zero   = np.zeros(grid.n_z)
    result = iterate(zero, zero, params, .2, grid)

    assert result.converged
    assert result.state.n == 1
    np.testing.assert_array_equal(result.state.u_n, 0.)

def test_rejects_bad_tolerance(desk):
    grid = Grid(n_z = 21)
    with pytest.raises(ValueError):
        iterate(np.zeros(21), np.zeros(21), desk, .1, grid, tol = 0.)

def test_picard_against_upwind(desk):
    grid   = Grid(n_z = 101, dt = 1e-3, t_end = .2)
    ic     = InitialData.build(desk, grid, make_profile('sine2pi'))
    bt     = BoundaryTraces(desk, ic.g[0], ic.g[-1])
    result = iterate(ic.f, ic.g, desk, .2, grid)

    assert result.converged
    assert len(result.ratios) > 0
    assert all(r < 1 for r in result.ratios)

    traj, diag = run(ic, bt, desk, grid)
    assert not diag.blew_up

    n    = min(len(traj), len(result.times))
    diff = np.max(np.abs(traj.u[:n] - result.state.u_n[:n]))
    assert diff <= 10 * (grid.dt + grid.dz)

    st  = result.state
    res = system_residual(
        result.times[-3:], result.z, st.u_n[-3:], st.eta_n[-3:], st.p_n[-3:],
        desk, ConstantProduction(desk.coefficients.q_tilde))
    assert res['residual_u'] <= .1
    assert res['residual_eta'] <= 1e-2

def test_picard_ratios_are_steady(desk):
    grid   = Grid(n_z = 101, dt = 1e-3, t_end = .2)
    ic     = InitialData.build(desk, grid, make_profile('sine4'))
    result = iterate(ic.f, ic.g, desk, .2, grid)

    assert result.converged
    ratios = np.array(result.ratios)
    assert len(ratios) >= 3
    assert np.all(ratios < 1)
    assert np.std(ratios, ddof = 1) / np.mean(ratios) < .5

def test_first_iterate_displacement(desk):
    grid   = Grid(n_z = 21, dt = 1e-2)
    times  = Grid(grid.n_z, grid.dt, .5).times()
    f      = .3 * np.sin(np.pi * grid.z)
    g      = .1 * np.cos(grid.z)
    u0     = np.tile(f, (len(times), 1))
    eta    = eta_update(u0, g, desk, times)

    choroid = ChoroidForcing(desk)
    tt      = times[:, None]
    expect  = (g[None, :] - f[None, :] * tt - choroid.displacement(tt)
               + choroid.rest_offset() + desk.coefficients.q_tilde * tt)

    np.testing.assert_allclose(eta, expect, atol = 1e-14)

def test_pressure_uniform_without_spatial_data(unit):
    grid     = Grid(n_z = 21, dt = 1e-2)
    times, u = _fields(grid, .5)
    p        = pressure_update(u, np.zeros(grid.n_z), unit, times)

    np.testing.assert_allclose(p, p[:, :1] * np.ones_like(p), rtol = 1e-15, atol = 1e-15)
    assert np.ptp(p[:, 0]) > 0

def test_converged_state_is_a_fixed_point(desk):
    grid   = Grid(n_z = 51, dt = 1e-3)
    ic     = InitialData.build(desk, grid, make_profile('sine2pi'))
    result = iterate(ic.f, ic.g, desk, .1, grid)
    assert result.converged

    u      = result.state.u_n
    p      = pressure_update(u, ic.g, desk, result.times)
    u_next = velocity_update(u, p, ic.f, desk, result.times, grid.dz)

    assert np.max(np.abs(u_next - u)) < PICARD_TOLERANCE
