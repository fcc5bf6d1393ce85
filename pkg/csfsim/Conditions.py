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

import enum
from dataclasses import dataclass, field

import numpy as np

from .Grid import d_dz, hk_norm

COMPATIBILITY_RTOL = 1e-9
HK_MAX_ORDER       = 5

class Verdict(enum.Enum):
    GlobalExpected = 'GlobalExpected'
    BlowupExpected = 'BlowupExpected'
    Indeterminate  = 'Indeterminate'

    def __str__(self):
        return self.value

@dataclass
class CompatibilityReport:
    residuals:  dict = field(default_factory = dict)
    references: dict = field(default_factory = dict)
    gating:     list = field(default_factory = list)
    tolerance:  float = COMPATIBILITY_RTOL

    def passes(self, name):
        scale = max(1., abs(self.references.get(name, 0.)))
        return self.residuals[name] <= self.tolerance * scale

    @property
    def passed(self):
        return all(self.passes(name) for name in self.gating)

    def lines(self):
        out = []
        for name, value in self.residuals.items():
            if name in self.gating:
                state = 'PASS' if self.passes(name) else 'FAIL'
            else:
                state = 'INFO'
            out.append(f'{name}: {value:.6e} {state}')
        return out

@dataclass
class AdmissibilityVerdict:
    sup_norm_ok: bool
    slope_ok:    bool
    h_k_norm:    float
    threshold:   float
    verdict:     Verdict
    sup_norm:    float = 0.
    min_slope:   float = 0.
    k_max:       int   = 2

    @property
    def margin(self):
        return self.min_slope + self.threshold

def closed_form_right_pressure(params, g_right):
    """Corner value of the pressure at z = L in its closed form."""
    coef = params.coefficients
    abar = params.alpha_bar
    w    = params.omega
    return (params.p_tissue
            - (coef.alpha * abar * w ** 2
               + abar * coef.k_tilde * w
               + coef.kappa * g_right) / params.area)

def check_compatibility(ic, bt, params, tolerance = COMPATIBILITY_RTOL):
    report = CompatibilityReport(tolerance = tolerance)
    res    = report.residuals
    ref    = report.references

    res['u_left']    = abs(float(ic.f[0]) - float(bt.u_left(0.)))
    res['u_right']   = abs(float(ic.f[-1]) - float(bt.u_right(0.)))
    res['eta_left']  = abs(float(bt.eta_left(0.)) - ic.g[0])
    res['eta_right'] = abs(float(bt.eta_right(0.)) - ic.g[-1])
    res['p_left']    = abs(float(bt.p_left(0.)) - ic.s[0])

    ref['eta_left']  = ic.g[0]
    ref['eta_right'] = ic.g[-1]
    ref['p_left']    = ic.s[0]

    # Reported, never gating: the integral and the closed form of s(L)
    # disagree in general
    s_closed = closed_form_right_pressure(params, ic.g[-1])
    res['s_right_mismatch'] = abs(float(ic.s[-1]) - s_closed)

    report.gating = ['u_left', 'u_right', 'eta_left', 'eta_right', 'p_left']
    return report

def admissibility(ic, params, k_max = 2):
    if k_max > HK_MAX_ORDER or k_max < 0:
        raise ValueError(f'derivative order must be within 0..{HK_MAX_ORDER} (got {k_max})')

    grid      = ic.grid
    threshold = params.beta_over_rho

    if ic.profile is not None:
        f      = grid.sample(ic.profile)
        fprime = d_dz(f, grid.dz)
    else:
        f      = ic.f
        fprime = ic.fprime()

    min_slope = float(np.min(fprime))
    sup_norm  = float(np.max(np.abs(f)))
    h_k       = hk_norm(f, grid.dz, k_max)

    slope_ok    = min_slope >= -threshold
    sup_norm_ok = sup_norm <= threshold

    if not slope_ok:
        verdict = Verdict.BlowupExpected
    elif sup_norm_ok:
        verdict = Verdict.GlobalExpected
    else:
        verdict = Verdict.Indeterminate

    return AdmissibilityVerdict(
        sup_norm_ok = sup_norm_ok,
        slope_ok    = slope_ok,
        h_k_norm    = h_k,
        threshold   = threshold,
        verdict     = verdict,
        sup_norm    = sup_norm,
        min_slope   = min_slope,
        k_max       = k_max)
