#!/usr/bin/env python3
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

import argparse
import logging
import sys

import csfsim
from csfsim.Commands import EXIT_ERROR, RUN_MODES_HELP

def parse_args(argv):
    parser = argparse.ArgumentParser(
        prog        = 'csf',
        description = 'Cerebrospinal fluid compartment simulator')

    parser.add_argument('mode', choices = list(csfsim.Commands.COMMANDS), help = RUN_MODES_HELP)
    parser.add_argument('--config', required = True, help = 'YAML run configuration')
    parser.add_argument('--out', default = None, help = 'output directory (overrides output.directory)')
    parser.add_argument('--quiet', action = 'store_true', help = 'only log warnings and errors')

    return parser.parse_args(argv)

def main(argv = None):
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else 0

    logging.basicConfig(
        format = '%(message)s',
        level  = logging.WARNING if args.quiet else logging.INFO)

    try:
        config = csfsim.load_config(args.config)
        if config.mode != args.mode:
            logging.info('running `%s\' on a configuration written for `%s\'', args.mode, config.mode)
            config.mode = args.mode
        return csfsim.run_command(config, args.out)
    except (csfsim.CsfSimError, ValueError, OSError) as e:
        print(f'csf: {e}', file = sys.stderr)
        return EXIT_ERROR

if __name__ == '__main__':
    sys.exit(main())
