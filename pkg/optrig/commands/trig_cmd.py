#
# Copyright (C) 2026  optrig developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Suite 500, Boston, MA 02110-1335  USA

"""The ``trig`` command: operator trigonometry of one matrix or a batch."""

from . import ReportCommand
from ..batch import read_batch_list, run_batch
from ..matrixfile import parse_matrix_file
from ..spectral import DEFAULT_SYM_TOL
from .. import trig


def add_trig_options(parser):
    parser.add_option("--seed", type="int", default=trig.DEFAULT_SEED,
                      help="Seed of the variational restarts (default 0).")
    parser.add_option("--restarts", type="int",
                      default=trig.DEFAULT_RESTARTS,
                      help="Number of variational restarts.")
    parser.add_option("--grad-tol", type="float",
                      default=trig.DEFAULT_GRAD_TOL,
                      help="Gradient norm at which a descent stops.")
    parser.add_option("--max-iter", type="int",
                      default=trig.DEFAULT_MAX_ITER,
                      help="Iteration cap of each descent.")
    parser.add_option("--bracket-tol", type="float",
                      default=trig.DEFAULT_BRACKET_TOL,
                      help="Relative bracket width of the convex search.")
    parser.add_option("--norm-method", type="choice",
                      choices=list(trig.NORM_METHODS), default='power',
                      help="Spectral norm used by the convex search:"
                           " power (default) or eigh.")
    parser.add_option("--eig-tol", type="float",
                      default=trig.DEFAULT_EIG_TOL,
                      help="Relative gap below which the spectrum counts"
                           " as degenerate.")
    parser.add_option("--opt-tol", type="float",
                      default=trig.DEFAULT_OPT_TOL,
                      help="Warn when a numerical path differs from the"
                           " closed form by more than this.")
    parser.add_option("--identity-tol", type="float",
                      default=trig.DEFAULT_IDENTITY_TOL,
                      help="Warn when cos^2 + sin^2 - 1 exceeds this.")
    parser.add_option("--sym-tol", type="float", default=DEFAULT_SYM_TOL,
                      help="Relative asymmetry that is symmetrised away.")


def trig_options(options):
    return trig.TrigOptions(
        restarts=options.restarts, seed=options.seed,
        grad_tol=options.grad_tol, max_iter=options.max_iter,
        bracket_tol=options.bracket_tol, norm_method=options.norm_method,
        eig_tol=options.eig_tol, opt_tol=options.opt_tol,
        identity_tol=options.identity_tol)


class TrigCommand(ReportCommand):

    name = 'trig'
    usage = "%prog [options] MATRIXFILE\n       %prog [options] --batch LIST"
    description = ("Report the first antieigenvalue, turning angle and"
                   " antieigenvectors of a symmetric positive definite"
                   " matrix.")

    def add_options(self, parser):
        add_trig_options(parser)
        parser.add_option("--batch", metavar="LIST",
                          help="Process every matrix file listed in LIST.")
        parser.add_option("--jobs", type="int", default=1,
                          help="Worker threads for --batch (default 1).")

    def check_args(self, parser, options, args):
        if options.batch is not None:
            if args:
                parser.error('--batch takes no MATRIXFILE argument')
            if options.jobs < 1:
                parser.error('--jobs must be at least 1')
        elif len(args) != 1:
            parser.error('expected one MATRIXFILE argument')

    def get_values(self, options, args):
        settings = trig_options(options)
        inputs = {'options': {
            'seed': settings.seed,
            'restarts': settings.restarts,
            'grad_tol': settings.grad_tol,
            'max_iter': settings.max_iter,
            'bracket_tol': settings.bracket_tol,
            'norm_method': settings.norm_method,
            'eig_tol': settings.eig_tol,
            'sym_tol': options.sym_tol,
        }}
        if options.batch is not None:
            paths = read_batch_list(options.batch)
            result = run_batch(paths, jobs=options.jobs, options=settings,
                               sym_tol=options.sym_tol)
            inputs.update({'batch': options.batch, 'jobs': options.jobs,
                           'paths': paths})
            self.warnings.extend(result.warnings)
            return inputs, result
        path = args[0]
        matrix = parse_matrix_file(path, sym_tol=options.sym_tol)
        report = trig.trig_report(matrix, settings)
        self.warnings.extend(report.warnings)
        inputs.update({'matrix_file': path, 'matrix': matrix})
        return inputs, report

    def exit_code(self, result):
        return getattr(result, 'exit_code', 0)
