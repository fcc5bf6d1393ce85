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
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .Exceptions import BlowupReached, ComplexEigenvalues, SlopeZeroAtFoot, ZeroDenominator

logger = logging.getLogger(__name__)

RICCATI_DIVERGENCE  = 1e9
RICCATI_TIME_TOL    = 1e-4
RICCATI_STEP_FACTOR = .05     # substeps never exceed this fraction of 1 / max(|w|, b)
REPEATED_EIG_RTOL   = 1e-12

#
# Slope equation along a characteristic with a pressure curvature source:
#
#   w' = -w^2 - b w - b p,    b = beta / rho,  p = P_zz
#
# Writing w = a / B turns it into the linear system
#
#   a' = -b p B,    B' = a + b B
#

@dataclass(frozen = True)
class RiccatiSetup:
    beta_over_rho: float
    p_zz:          float
    omega0:        float
    eig1:          float
    eig2:          float

    @property
    def repeated(self):
        return abs(self.eig1 - self.eig2) <= REPEATED_EIG_RTOL * max(1., abs(self.eig1))

    def rhs(self, w, p_zz = None):
        b = self.beta_over_rho
        p = self.p_zz if p_zz is None else p_zz
        return -w * w - b * w - b * p

def riccati_setup(beta_over_rho, p_zz, omega0):
    b    = beta_over_rho
    disc = b * b - 4 * b * p_zz

    if disc < -REPEATED_EIG_RTOL * b * b:
        raise ComplexEigenvalues(disc)

    root = math.sqrt(max(disc, 0.))
    return RiccatiSetup(
        beta_over_rho = b,
        p_zz          = p_zz,
        omega0        = omega0,
        eig1          = .5 * (b + root),
        eig2          = .5 * (b - root))

def _linear_pair(setup, t):
    """(a(t), B(t)) from a(0) = omega0, B(0) = 2."""
    b  = setup.beta_over_rho
    w0 = setup.omega0
    t  = np.asarray(t, dtype = float)

    if setup.repeated:
        lam = .5 * (setup.eig1 + setup.eig2)
        c1  = 2.
        c2  = w0 + b
        e   = np.exp(lam * t)
        B   = (c1 + c2 * t) * e
        a   = ((lam - b) * (c1 + c2 * t) + c2) * e
    else:
        l1, l2 = setup.eig1, setup.eig2
        c1     = (w0 + 2 * b - 2 * l2) / (l1 - l2)
        c2     = 2. - c1
        e1     = np.exp(l1 * t)
        e2     = np.exp(l2 * t)
        B      = c1 * e1 + c2 * e2
        a      = c1 * (l1 - b) * e1 + c2 * (l2 - b) * e2

    return a, B

def _check_pole(setup, t, samples = 2001):
    if t <= 0:
        return

    ts   = np.linspace(0., t, samples)
    _, B = _linear_pair(setup, ts)
    hits = np.flatnonzero(np.sign(B[:-1]) * np.sign(B[1:]) <= 0)

    if len(hits) > 0:
        i = hits[0]
        if B[i] == 0:
            raise ZeroDenominator(float(ts[i]))
        raise ZeroDenominator(
            brentq(lambda s: float(_linear_pair(setup, s)[1]), ts[i], ts[i + 1]))

def riccati_particular(setup, t):
    """Particular solution a(t) / B(t). Its initial value is omega0 / 2."""
    _check_pole(setup, float(np.max(t)))
    a, B = _linear_pair(setup, t)
    w = a / B
    return float(w) if np.ndim(w) == 0 else w

def _general_scalar(setup, t):
    b  = setup.beta_over_rho
    w0 = setup.omega0

    # exp(-Phi(s)) with Phi' = 2 wbar + b, in closed form through B
    def inv_growth(s):
        _, B = _linear_pair(setup, s)
        return 4. * math.exp(b * s) / float(B) ** 2

    _, B_t  = _linear_pair(setup, t)
    growth  = (float(B_t) / 2.) ** 2 * math.exp(-b * t)
    head    = 2. / w0

    def tail(s):
        return quad(inv_growth, 0., s, epsabs = 1e-14, epsrel = 1e-12, limit = 200)[0]

    # y changes sign once the integral catches up with -2 / omega0
    rest = head + tail(t)
    if w0 < 0 and rest >= 0:
        raise BlowupReached(brentq(lambda s: head + tail(s), 0., t))

    return riccati_particular(setup, t) + 1. / (growth * rest)

def riccati_general(setup, t):
    """Solution of the slope equation from w(0) = omega0, as the particular
    solution plus the reciprocal of the linearised correction y."""
    if setup.omega0 == 0:
        raise SlopeZeroAtFoot('initial slope is zero; the correction is undefined')

    _check_pole(setup, float(np.max(t)))

    if np.ndim(t) == 0:
        return _general_scalar(setup, float(t))
    return np.array(
        [_general_scalar(setup, float(s)) for s in np.ravel(t)]).reshape(np.shape(t))

def initial_mismatch(setup):
    """w(0) - omega0 for the general solution; zero up to rounding."""
    w = riccati_general(setup, 0.)
    if abs(w - setup.omega0) > 1e-12 * max(1., abs(setup.omega0)):
        logger.warning('general solution starts at %g instead of %g', w, setup.omega0)
    return w - setup.omega0

@dataclass
class RiccatiTrajectory:
    times:    np.ndarray
    omega:    np.ndarray
    diverged: bool
    t_blow:   float = math.inf

def _rk4(setup, w, t, h, p_zz):
    def f(tt, ww):
        return setup.rhs(ww, p_zz(tt) if p_zz is not None else None)

    k1 = f(t, w)
    k2 = f(t + .5 * h, w + .5 * h * k1)
    k3 = f(t + .5 * h, w + .5 * h * k2)
    k4 = f(t + h, w + h * k3)
    return w + h / 6. * (k1 + 2 * k2 + 2 * k3 + k4)

def _escaped(w):
    return not math.isfinite(w) or abs(w) > RICCATI_DIVERGENCE

def riccati_integrate(setup, omega0, t_max, dt, p_zz = None):
    """Classic RK4 on a uniform output grid. Each output step is split in
    substeps no longer than a small fraction of 1 / max(|w|, b) so the
    integration follows the solution up to the divergence threshold; the
    crossing is then located by bisection on the last substep. `p_zz` may
    be a callable of time replacing the constant coefficient of the setup."""
    if dt <= 0:
        raise ValueError('time step must be positive')

    n     = int(math.ceil(t_max / dt - 1e-12))
    times = [0.]
    omega = [float(omega0)]
    w     = float(omega0)
    t     = 0.

    forcing_rate = math.sqrt(abs(setup.beta_over_rho * setup.p_zz))

    for k in range(n):
        t_next = min((k + 1) * dt, t_max)
        while t < t_next:
            rate  = max(abs(w), setup.beta_over_rho, forcing_rate, 1e-300)
            h     = min(t_next - t, RICCATI_STEP_FACTOR / rate)
            w_new = _rk4(setup, w, t, h, p_zz)

            if _escaped(w_new):
                lo, hi = 0., h
                while hi - lo > RICCATI_TIME_TOL * 1e-3:
                    mid = .5 * (lo + hi)
                    if _escaped(_rk4(setup, w, t, mid, p_zz)):
                        hi = mid
                    else:
                        lo = mid
                t_blow = t + hi
                logger.debug('slope diverges at t = %.8g', t_blow)
                return RiccatiTrajectory(np.array(times), np.array(omega), True, t_blow)

            w  = w_new
            t += h
            if t_next - t < 1e-15 * max(1., t_next):
                t = t_next

        times.append(t)
        omega.append(w)

    return RiccatiTrajectory(np.array(times), np.array(omega), False)
