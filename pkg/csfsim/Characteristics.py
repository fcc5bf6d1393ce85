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
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .Exceptions import BlowupReached, MultipleRoots, NoRoot

logger = logging.getLogger(__name__)

FOOT_SCAN_POINTS = 2001

#
# Per-characteristic classification
#

class Global:
    def is_finite(self):
        return False

    def __eq__(self, other):
        return isinstance(other, Global)

    def __repr__(self):
        return 'Global'

@dataclass(frozen = True)
class FiniteTime:
    T: float

    def is_finite(self):
        return True

    def __repr__(self):
        return f'FiniteTime({self.T:.6g})'

def _lift(fn):
    # Accepts scalar-only callables as well
    def call(x):
        x = np.asarray(x, dtype = float)
        try:
            y = np.asarray(fn(x), dtype = float)
            if y.shape == x.shape:
                return y
        except (TypeError, ValueError):
            pass
        return np.vectorize(lambda v: float(fn(v)))(x)
    return call

def _decay_integral(beta_over_rho, t):
    # integral of exp(-b s) over [0, t]
    return -math.expm1(-beta_over_rho * t) / beta_over_rho

def foot_point(f, beta_over_rho, t, z, length = 1., n_scan = FOOT_SCAN_POINTS):
    """Solves z = lam + f(lam) (rho / beta) (1 - exp(-beta t / rho)) for the
    foot point lam in [0, L].

    Only feet inside the domain are searched. Points of the inflow strip,
    reached by no characteristic from [0, L] (for a constant f = c > 0,
    z < c (rho / beta) (1 - exp(-beta t / rho))), raise NoRoot, and so does
    homogeneous_solution there.
    """
    if t == 0:
        return float(z)

    fv    = _lift(f)
    shift = _decay_integral(beta_over_rho, t)
    lam   = np.linspace(0., length, n_scan)
    resid = lam + fv(lam) * shift - z

    zeros   = np.flatnonzero(resid == 0)
    changes = np.flatnonzero(np.sign(resid[:-1]) * np.sign(resid[1:]) < 0)
    count   = len(zeros) + len(changes)

    if count == 0:
        raise NoRoot(f'no characteristic reaches z = {z:g} at t = {t:g}')
    if count > 1:
        raise MultipleRoots(
            f'{count} characteristics reach z = {z:g} at t = {t:g}; '
            'they have crossed')

    if len(zeros) == 1:
        return float(lam[zeros[0]])

    i = changes[0]
    return brentq(
        lambda x: x + float(fv(x)) * shift - z,
        lam[i], lam[i + 1],
        xtol = 1e-15, rtol = 4 * np.finfo(float).eps)

def homogeneous_solution(f, beta_over_rho, t, z, length = 1.):
    """Exact pressure-free solution u(t, z) = f(lam) exp(-beta t / rho)
    for z reached by a characteristic from [0, L]; see foot_point."""
    if t == 0:
        return float(_lift(f)(z))

    lam = foot_point(f, beta_over_rho, t, z, length)
    return float(_lift(f)(lam)) * math.exp(-beta_over_rho * t)

def slope_denominator(fprime0, beta_over_rho, t):
    return 1. + fprime0 * _decay_integral(beta_over_rho, t)

def blowup_time(fprime0, beta_over_rho):
    if fprime0 >= -beta_over_rho:
        return Global()
    return FiniteTime(math.log(fprime0 / (fprime0 + beta_over_rho)) / beta_over_rho)

def slope_closed_form(fprime0, beta_over_rho, t):
    """u_z carried along the characteristic with initial slope fprime0."""
    state = blowup_time(fprime0, beta_over_rho)
    if state.is_finite() and t >= state.T:
        raise BlowupReached(state.T)

    return (fprime0 * math.exp(-beta_over_rho * t)
            / slope_denominator(fprime0, beta_over_rho, t))

@dataclass
class CharacteristicFan:
    lambdas:       np.ndarray
    f_vals:        np.ndarray
    fprime_vals:   np.ndarray
    beta_over_rho: float

    def __post_init__(self):
        self.lambdas     = np.asarray(self.lambdas, dtype = float)
        self.f_vals      = np.asarray(self.f_vals, dtype = float)
        self.fprime_vals = np.asarray(self.fprime_vals, dtype = float)

        if np.any(np.diff(self.lambdas) <= 0):
            raise ValueError('foot points must be strictly increasing')
        if not (self.lambdas.shape == self.f_vals.shape == self.fprime_vals.shape):
            raise ValueError('fan arrays must share one shape')

    @staticmethod
    def from_profile(f, beta_over_rho, length = 1., n = 401, fprime = None):
        lam = np.linspace(0., length, n)
        fv  = _lift(f)(lam)

        if fprime is None:
            fp = np.gradient(fv, lam, edge_order = 2)
        else:
            fp = _lift(fprime)(lam)

        return CharacteristicFan(lam, fv, fp, beta_over_rho)

@dataclass
class BlowupReport:
    classifications:  list
    lambdas:          np.ndarray
    min_blowup_time:  float
    criterion_margin: float
    argmin_lambda:    float = math.nan
    times:            np.ndarray = field(default = None, repr = False)

    def finite_count(self):
        return sum(1 for c in self.classifications if c.is_finite())

def scan_fan(fan):
    b = fan.beta_over_rho

    classes = [blowup_time(fp, b) for fp in fan.fprime_vals]
    times   = np.array([c.T if c.is_finite() else math.inf for c in classes])
    margin  = float(np.min(fan.fprime_vals) + b)

    if np.all(np.isinf(times)):
        t_min, lam_min = math.inf, math.nan
    else:
        i              = int(np.argmin(times))
        t_min, lam_min = float(times[i]), float(fan.lambdas[i])

    logger.debug('fan of %d characteristics: %d blow up, earliest T = %g',
        len(classes), int(np.sum(np.isfinite(times))), t_min)

    return BlowupReport(
        classifications  = classes,
        lambdas          = fan.lambdas,
        min_blowup_time  = t_min,
        criterion_margin = margin,
        argmin_lambda    = lam_min,
        times            = times)
