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

import math

import numpy as np
import pytest

from csfsim import (
    BlowupReached, CharacteristicFan, ComplexEigenvalues, FiniteTime, Global,
    NoRoot, SlopeZeroAtFoot, blowup_time, foot_point, homogeneous_solution,
    riccati_general, riccati_integrate, riccati_particular, riccati_setup,
    scan_fan, slope_closed_form)
from csfsim.Presets import make_profile
from csfsim.Riccati import initial_mismatch

#
# Characteristics
#

def test_solution_at_start():
    f = make_profile('sine4')
    assert homogeneous_solution(f, 1., 0., .3) == pytest.approx(f(.3))

def test_uniform_state_decays():
    t = 1.
    assert homogeneous_solution(lambda x: .1, 1., t, .5) == pytest.approx(.1 * math.exp(-t))
    assert foot_point(lambda x: .1, 1., t, .5) == pytest.approx(.5 - .1 * (1 - math.exp(-t)))

def test_inflow_strip_has_no_foot():
    t     = 1.
    strip = .1 * (1 - math.exp(-t))

    with pytest.raises(NoRoot):
        foot_point(lambda x: .1, 1., t, .5 * strip)
    with pytest.raises(NoRoot):
        homogeneous_solution(lambda x: .1, 1., t, .5 * strip)
    assert homogeneous_solution(lambda x: .1, 1., t, 2 * strip) == pytest.approx(.1 * math.exp(-t))

def test_linear_profile_foot_point():
    t   = 1.
    lam = .5 / (2 - math.exp(-t))

    assert foot_point(lambda x: x, 1., t, .5) == pytest.approx(lam, abs = 1e-12)
    assert homogeneous_solution(lambda x: x, 1., t, .5) == pytest.approx(lam * math.exp(-t), abs = 1e-12)

def test_slope_zero_persists():
    for t in (0., .5, 3.):
        assert slope_closed_form(0., 1., t) == 0.

def test_slope_at_threshold_is_constant():
    for t in (0., .5, 3.):
        assert slope_closed_form(-1.5, 1.5, t) == pytest.approx(-1.5)

def test_slope_past_blowup():
    assert abs(slope_closed_form(-2., 1., math.log(2) - 1e-6)) > 1e5
    with pytest.raises(BlowupReached):
        slope_closed_form(-2., 1., math.log(2))

def test_blowup_classification():
    assert blowup_time(.5, 1.) == Global()
    assert blowup_time(-1., 1.) == Global()

    state = blowup_time(-2., 1.)
    assert isinstance(state, FiniteTime)
    assert state.T == pytest.approx(math.log(2))

@pytest.mark.parametrize('c', [.5, 2., 7.])
def test_blowup_time_scaling(c):
    base   = blowup_time(-3., 1.)
    scaled = blowup_time(-3. * c, c)
    assert scaled.T == pytest.approx(base.T / c)
    assert blowup_time(-.5 * c, c) == Global()

def test_fan_zero():
    fan    = CharacteristicFan.from_profile(make_profile('zero'), 1., n = 51)
    report = scan_fan(fan)

    assert report.finite_count() == 0
    assert math.isinf(report.min_blowup_time)

def test_fan_negexp():
    b      = .5
    f      = make_profile('negexp')
    fan    = CharacteristicFan.from_profile(f, b, n = 401, fprime = f.derivative)
    report = scan_fan(fan)

    assert report.finite_count() == 401
    assert report.argmin_lambda == pytest.approx(1.)
    assert report.min_blowup_time == pytest.approx(2 * math.log(math.e / (math.e - .5)))
    assert report.criterion_margin == pytest.approx(b - math.e)

def test_fan_sine_desk():
    f      = make_profile('sine4')
    fan    = CharacteristicFan.from_profile(f, 4 * math.pi + 1, n = 401, fprime = f.derivative)
    report = scan_fan(fan)

    assert report.finite_count() == 0
    assert report.criterion_margin == pytest.approx(1.)

def test_fan_rejects_unsorted_feet():
    with pytest.raises(ValueError):
        CharacteristicFan(np.array([0., .5, .2]), np.zeros(3), np.zeros(3), 1.)

#
# Riccati
#

def test_setup_eigenvalues():
    s = riccati_setup(1., 0., -1.)
    assert {s.eig1, s.eig2} == {1., 0.}

    s = riccati_setup(1., 1. / 8, -1.)
    assert s.eig1 == pytest.approx((1 + math.sqrt(.5)) / 2)
    assert s.eig2 == pytest.approx((1 - math.sqrt(.5)) / 2)

def test_setup_complex():
    with pytest.raises(ComplexEigenvalues):
        riccati_setup(1., .3, -1.)

def test_particular_zero():
    s = riccati_setup(1., 0., 0.)
    np.testing.assert_array_equal(riccati_particular(s, np.linspace(0., 2., 5)), 0.)

def test_particular_starts_at_half():
    s = riccati_setup(1., 1. / 8, .6)
    assert riccati_particular(s, 0.) == pytest.approx(.3)

def test_general_starts_at_slope():
    s = riccati_setup(1., 1. / 8, .6)
    assert riccati_general(s, 0.) == pytest.approx(.6)

def test_general_needs_nonzero_slope():
    with pytest.raises(SlopeZeroAtFoot):
        riccati_general(riccati_setup(1., 0., 0.), 1.)

@pytest.mark.parametrize('b, w0', [(1., -.5), (1., .8), (2.5, -2.), (.3, 1.5)])
def test_general_matches_closed_form(b, w0):
    s = riccati_setup(b, 0., w0)
    for t in (.1, .5, 1., 2.):
        assert riccati_general(s, t) == pytest.approx(slope_closed_form(w0, b, t), abs = 1e-7)

def test_general_stops_at_blowup():
    s = riccati_setup(1., 0., -2.)
    assert riccati_general(s, .5) == pytest.approx(slope_closed_form(-2., 1., .5), abs = 1e-7)

    with pytest.raises(BlowupReached) as e:
        riccati_general(s, 1.)
    assert e.value.t_blow == pytest.approx(math.log(2), rel = 1e-8)

def test_initial_mismatch_vanishes():
    for p_zz, w0 in [(0., -2.), (1. / 8, .6), (.25, .4)]:
        assert initial_mismatch(riccati_setup(1., p_zz, w0)) == pytest.approx(0., abs = 1e-12)

@pytest.mark.parametrize('p_zz, w0', [(1. / 8, .5), (.2, -.1), (.25, .4)])
def test_general_against_rk4(p_zz, w0):
    s    = riccati_setup(1., p_zz, w0)
    traj = riccati_integrate(s, w0, 2., .01)

    assert not traj.diverged
    idx = np.arange(0, len(traj.times), 20)
    np.testing.assert_allclose(
        riccati_general(s, traj.times[idx]), traj.omega[idx], atol = 1e-6)

def test_integrate_finds_ln2():
    traj = riccati_integrate(riccati_setup(1., 0., -2.), -2., 2., .01)
    assert traj.diverged
    assert traj.t_blow == pytest.approx(math.log(2), abs = 1e-4)

def test_integrate_positive_slope_decays():
    traj = riccati_integrate(riccati_setup(1., 0., 1.), 1., 20., .01)
    assert not traj.diverged
    assert abs(traj.omega[-1]) < 1e-6

def test_blowup_time_against_rk4():
    rng = np.random.default_rng(7)
    for _ in range(50):
        b  = rng.uniform(.1, 10.)
        w0 = -b * (1. + rng.uniform(.05, 3.))
        T  = blowup_time(w0, b).T

        traj = riccati_integrate(riccati_setup(b, 0., w0), w0, 2 * T, T / 200)
        assert traj.diverged
        assert abs(traj.t_blow - T) <= 1e-3 * T

def test_global_existence_dichotomy():
    rng = np.random.default_rng(11)
    for _ in range(50):
        b  = rng.uniform(.2, 5.)
        w0 = -b + b * rng.uniform(0., 5.)
        traj = riccati_integrate(riccati_setup(b, 0., w0), w0, 20. / b, .05 / b)
        assert not traj.diverged

        w0 = -b * (1. + rng.uniform(.05, 3.))
        traj = riccati_integrate(riccati_setup(b, 0., w0), w0, 20. / b, .05 / b)
        assert traj.diverged

def test_integrate_stays_at_equilibrium():
    s    = riccati_setup(1., 1. / 8, 0.)
    w0   = -s.eig1
    traj = riccati_integrate(s, w0, 5., .01)

    assert w0 ** 2 + w0 + 1. / 8 == pytest.approx(0., abs = 1e-15)
    assert not traj.diverged
    np.testing.assert_allclose(traj.omega, w0, atol = 1e-12)

@pytest.mark.parametrize('p_zz, w0', [(1. / 8, .6), (.25, -.2), (.1, 1.)])
def test_particular_solves_riccati(p_zz, w0):
    b   = 1.
    s   = riccati_setup(b, p_zz, w0)
    t   = np.linspace(.05, 1., 20)
    h   = 1e-5
    w   = riccati_particular(s, t)
    dw  = (riccati_particular(s, t + h) - riccati_particular(s, t - h)) / (2 * h)

    np.testing.assert_allclose(dw + w ** 2 + b * w + b * p_zz, 0., atol = 1e-6)

def test_blowup_time_is_monotone():
    slopes = -np.linspace(1.1, 10., 25)
    times  = [blowup_time(w, 1.).T for w in slopes]
    assert np.all(np.diff(times) < 0)
