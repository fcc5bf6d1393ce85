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

MMHG        = 133.322387415  # Pa
CM3_PER_MIN = 1e-6 / 60      # m^3 / s

from .Exceptions       import CsfSimError, GridMismatch, CflViolation, BlowupReached
from .Exceptions       import NoRoot, MultipleRoots, ComplexEigenvalues, ZeroDenominator
from .Exceptions       import SlopeZeroAtFoot, NotContracting
from .Exceptions       import ParseError, UnknownKey, UnitError

from .ModelParameters  import PhysicalParams, DerivedCoefficients, derive
from .ModelParameters  import physiological_params, desk_params, preset_params, PARAMETER_PRESETS
from .Forcing          import ChoroidForcing, forcing, forcing_dt, forcing_dtt
from .Production       import Production, ConstantProduction, SinusoidalProduction
from .Production       import ExpressionProduction, production_F
from .Grid             import Grid, d_dz, upwind_dz, l2_norm, hk_norm, system_residual

from .InitialData      import InitialData, build_initial_pressure, balanced_displacement
from .BoundaryTraces   import BoundaryTraces, boundary_traces
from .Conditions       import Verdict, CompatibilityReport, AdmissibilityVerdict
from .Conditions       import check_compatibility, admissibility

from .Characteristics  import Global, FiniteTime, CharacteristicFan, BlowupReport
from .Characteristics  import foot_point, homogeneous_solution, blowup_time
from .Characteristics  import slope_closed_form, scan_fan
from .Riccati          import RiccatiSetup, RiccatiTrajectory, riccati_setup
from .Riccati          import riccati_particular, riccati_general, riccati_integrate

from .RunDiagnostics   import RunDiagnostics
from .UpwindSolver     import UpwindSolver, BlowupMonitor, BlowupDetected, State, Trajectory
from .PicardSolver     import IterationState, PicardResult, iterate
from .Periodic         import PeriodicSolution, StabilityResult, build_periodic
from .Periodic         import stability_experiment, stability_table

from .Presets          import VelocityProfile, make_profile, IC_PRESETS
from .SimulationConfig import RunConfig, load_config, write_config
from .Commands         import run_command, cmd_simulate, cmd_blowup, cmd_periodic
from .Commands         import cmd_check, cmd_compare
