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

class CsfSimError(Exception):
    pass

class GridMismatch(CsfSimError):
    def __init__(self, what, expected, got):
        super().__init__(
            f'{what}: expected {expected} samples, got {got}')
        self.expected = expected
        self.got      = got

class CflViolation(CsfSimError):
    def __init__(self, cfl):
        super().__init__(f'CFL number {cfl:.6g} is not below 1')
        self.cfl = cfl

class BlowupReached(CsfSimError):
    def __init__(self, t_blow):
        super().__init__(f'slope diverges at t = {t_blow:.6g}')
        self.t_blow = t_blow

class NoRoot(CsfSimError):
    pass

class MultipleRoots(CsfSimError):
    pass

class ComplexEigenvalues(CsfSimError):
    def __init__(self, discriminant):
        super().__init__(
            f'Riccati system has complex eigenvalues '
            f'(discriminant {discriminant:.6g} < 0)')
        self.discriminant = discriminant

class ZeroDenominator(CsfSimError):
    def __init__(self, t):
        super().__init__(f'particular solution has a pole at t = {t:.6g}')
        self.t = t

class SlopeZeroAtFoot(CsfSimError):
    pass

class NotContracting(CsfSimError):
    def __init__(self, ratios):
        super().__init__(
            'Picard iteration is not contracting (last ratios: '
            + ', '.join(f'{r:.4g}' for r in ratios) + '); reduce T')
        self.ratios = list(ratios)

#
# Configuration errors
#

class ParseError(CsfSimError):
    def __init__(self, message, line = None):
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)
        self.line = line

class UnknownKey(CsfSimError):
    def __init__(self, name):
        super().__init__(f'unknown configuration key `{name}\'')
        self.name = name

class UnitError(CsfSimError):
    def __init__(self, field, detail = None):
        message = f'cannot convert field `{field}\''
        if detail is not None:
            message += f': {detail}'
        super().__init__(message)
        self.field = field
