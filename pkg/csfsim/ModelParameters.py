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
from dataclasses import dataclass, replace, asdict

from . import MMHG, CM3_PER_MIN

# Tissue and fluid properties (clinical defaults, SI)
CSF_DENSITY            = 1004.            # kg / m^3 (1004 - 1007)
CSF_VISCOSITY          = 1e-3             # Pa * s
TISSUE_WIDTH           = 5e-4             # m
SPRING_ELASTICITY      = 8.               # N / m
BRAIN_DAMPENING        = 0.35e-3          # N * s / m
CSF_PRODUCTION         = 0.32 * CM3_PER_MIN   # m^3 / s
PARENCHYMA_PRESSURE    = 10 * MMHG        # Pa (venous level)
COMPARTMENT_SECTION    = 3.5e-6           # m^2 (3 - 4 mm^2)
COMPARTMENT_LENGTH     = 1.               # m
LUMEN_RADIUS           = 1e-3             # m (assumed, not measured)
CARDIAC_FREQUENCY      = 2 * math.pi      # rad / s (1 Hz)

# Choroid expansion: 1.29 - 1.55 cm^3/min per cardiac cycle, spread over
# the compartment section
CHOROID_EXPANSION_RATE = 1.42 * CM3_PER_MIN   # m^3 / s
CHOROID_AMPLITUDE      = CHOROID_EXPANSION_RATE * 1. / COMPARTMENT_SECTION # m

# Nondimensional desk-scale presets (beta / rho)
DESK_DAMPING           = 4 * math.pi + 1
DESK_UNIT_DAMPING      = 1.
DESK_WEAK_DAMPING      = .5

@dataclass(frozen = True)
class DerivedCoefficients:
    alpha:   float        # inertial coefficient rho * A * delta
    k_tilde: float        # k_d
    kappa:   float        # k_e
    beta:    float        # 8 mu / r^2
    q_tilde: float        # Q_p / A

@dataclass(frozen = True)
class PhysicalParams:
    rho:          float = CSF_DENSITY
    mu:           float = CSF_VISCOSITY
    r_lumen:      float = LUMEN_RADIUS
    delta_tissue: float = TISSUE_WIDTH
    area:         float = COMPARTMENT_SECTION
    k_e:          float = SPRING_ELASTICITY
    k_d:          float = BRAIN_DAMPENING
    q_p:          float = CSF_PRODUCTION
    p_tissue:     float = PARENCHYMA_PRESSURE
    alpha_bar:    float = CHOROID_AMPLITUDE
    omega:        float = CARDIAC_FREQUENCY
    length:       float = COMPARTMENT_LENGTH

    @property
    def coefficients(self):
        return derive(self)

    @property
    def beta_over_rho(self):
        return derive(self).beta / self.rho

    @property
    def period(self):
        return 2 * math.pi / self.omega

    def with_changes(self, **changes):
        return replace(self, **changes)

    def as_dict(self):
        return asdict(self)

def _check_positive(params, names):
    for name in names:
        value = getattr(params, name)
        if not math.isfinite(value) or value <= 0:
            raise ValueError(f'{name} must be finite and positive (got {value})')

def derive(params):
    _check_positive(
        params,
        ['rho', 'mu', 'r_lumen', 'area', 'length', 'omega', 'delta_tissue'])

    for name in ['k_e', 'k_d']:
        value = getattr(params, name)
        if not math.isfinite(value) or value < 0:
            raise ValueError(f'{name} must be finite and non-negative (got {value})')

    for name in ['q_p', 'p_tissue', 'alpha_bar']:
        if not math.isfinite(getattr(params, name)):
            raise ValueError(f'{name} must be finite')

    return DerivedCoefficients(
        alpha   = params.rho * params.area * params.delta_tissue,
        k_tilde = params.k_d,
        kappa   = params.k_e,
        beta    = 8 * params.mu / params.r_lumen ** 2,
        q_tilde = params.q_p / params.area)

def physiological_params(**overrides):
    return PhysicalParams(**overrides)

def desk_params(beta_over_rho = DESK_DAMPING, **overrides):
    """Nondimensional parameter set with rho = A = L = 1. The tissue
    coefficients are kept small so that the explicit scheme resolves the
    elastic wave on the default grid."""
    params = PhysicalParams(
        rho          = 1.,
        mu           = beta_over_rho / 8,
        r_lumen      = 1.,
        delta_tissue = 1e-3,
        area         = 1.,
        k_e          = 1e-3,
        k_d          = 1e-3,
        q_p          = 1e-2,
        p_tissue     = 0.,
        alpha_bar    = .1,
        omega        = 2 * math.pi,
        length       = 1.)

    return replace(params, **overrides)

PARAMETER_PRESETS = {
    'physiological': lambda: physiological_params(),
    'desk':          lambda: desk_params(DESK_DAMPING),
    'desk-unit':     lambda: desk_params(DESK_UNIT_DAMPING),
    'desk-weak':     lambda: desk_params(DESK_WEAK_DAMPING),
}

def preset_params(name):
    if name not in PARAMETER_PRESETS:
        raise ValueError(f'unknown parameter preset `{name}\'')
    return PARAMETER_PRESETS[name]()
