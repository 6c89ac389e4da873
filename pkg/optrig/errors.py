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

"""Exceptions raised by optrig.

Every error carries a ``_fmt`` template which is filled in from the keyword
arguments given to the constructor, and the process exit code the command
line front end uses when the error escapes a subcommand.
"""

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


class OptrigError(Exception):
    """Base class for all optrig errors."""

    _fmt = "An optrig error occurred"
    exit_code = 1

    def __init__(self, msg=None, **kwds):
        Exception.__init__(self)
        if msg is not None:
            self._preformatted_string = msg
        else:
            self._preformatted_string = None
            for key, value in kwds.items():
                setattr(self, key, value)

    def _format(self):
        s = getattr(self, '_preformatted_string', None)
        if s is not None:
            return s
        try:
            return self._fmt % self.__dict__
        except (KeyError, TypeError, ValueError) as e:
            return 'Unprintable exception %s: dict=%r, fmt=%r, error=%r' % (
                self.__class__.__name__, self.__dict__, self._fmt, e)

    def __str__(self):
        return self._format()

    def __repr__(self):
        return '%s(%s)' % (self.__class__.__name__, str(self))

    def __eq__(self, other):
        if self.__class__ is not other.__class__:
            return NotImplemented
        return self.__dict__ == other.__dict__

    __hash__ = Exception.__hash__


class InputError(OptrigError):
    """Invalid input: bad files, bad parameters, failed validation."""

    exit_code = EXIT_INPUT


class NumericalError(OptrigError):
    """A numerical procedure did not deliver a result."""

    exit_code = EXIT_NUMERICAL


class ConvergenceFailure(NumericalError):

    _fmt = "%(procedure)s did not converge: %(reason)s"


# optrig-core

class NotSquare(InputError, ValueError):

    _fmt = "Matrix is not square: shape %(shape)s"


class NonFiniteEntry(InputError, ValueError):

    _fmt = "Matrix has a non-finite entry at (%(row)d, %(column)d)"


class NotSymmetric(InputError, ValueError):

    _fmt = ("Matrix is not symmetric: asymmetry %(asymmetry)g exceeds"
            " tolerance %(tolerance)g")


class NotPositiveDefinite(InputError, ValueError):

    _fmt = ("Matrix is not positive definite: smallest eigenvalue"
            " %(smallest)g <= %(tolerance)g")


class DegenerateSpectrum(InputError):

    _fmt = ("Spectrum is degenerate (lambda_1 = lambda_n = %(value)g):"
            " no vector is turned")


class ZeroVector(InputError, ValueError):

    _fmt = "The zero vector has no turning angle"


class DimensionMismatch(InputError, ValueError):

    _fmt = "Dimension mismatch: %(left)s against %(right)s"


class InvalidParameter(InputError, ValueError):

    _fmt = "Invalid value for %(name)s: %(value)r (%(reason)s)"


# granular-stress

class InvalidPrincipalStress(InputError, ValueError):

    _fmt = ("Principal stresses must satisfy sigma1 >= sigma2 > 0,"
            " got sigma1=%(sigma1)g, sigma2=%(sigma2)g")


class UnstableParameters(InputError, ValueError):

    _fmt = ("Slope angle %(theta)g rad is not sustainable with K=%(K)g:"
            " tan(theta) must be below sqrt(K)")


class GridTooSmall(InputError, ValueError):

    _fmt = "Grid %(nx)d x %(nz)d is too small; need at least %(minimum)d"


class InvalidStressField(InputError, ValueError):

    _fmt = "Invalid stress field: %(reason)s"


# capm-sharpe

class ParseError(InputError, ValueError):

    _fmt = "Cannot parse row %(row)d: %(reason)s"


class EmptySeries(InputError, ValueError):

    _fmt = "The return series is empty"


class SeriesTooShort(InputError, ValueError):

    _fmt = "Need at least %(minimum)d returns, got %(length)d"


class ZeroVolatility(InputError, ValueError):

    _fmt = "The returns have zero standard deviation"


class NonPositiveReturn(InputError, ValueError):

    _fmt = ("Net return %(value)g is not positive; the geometric mean is"
            " undefined")


# pythagorean-trig

class NonPositive(InputError, ValueError):

    _fmt = "Parameters must be positive integers, got m=%(m)d, n=%(n)d"


class OrderViolation(InputError, ValueError):

    _fmt = "Parameters must satisfy m > n, got m=%(m)d, n=%(n)d"


class NotCoprime(InputError, ValueError):

    _fmt = "Parameters m=%(m)d and n=%(n)d share the factor %(gcd)d"


class SameParity(InputError, ValueError):

    _fmt = ("Parameters m=%(m)d and n=%(n)d must have opposite parity")


class Overflow(InputError, ArithmeticError):

    _fmt = "%(quantity)s exceeds the 64-bit integer range"


class NotPrimitive(InputError, ValueError):

    _fmt = "Triple (%(a)d, %(b)d, %(c)d) is not primitive (gcd %(gcd)d)"


class NotRepresentable(InputError, ValueError):

    _fmt = ("Triple (%(a)d, %(b)d, %(c)d) does not come from Euclid's"
            " formula: %(reason)s")


class NonPositiveInput(InputError, ValueError):

    _fmt = "Expected a positive value, got %(value)r"


# cli-report

class FormatError(InputError, ValueError):

    _fmt = "%(path)s:%(line)d:%(column)d: %(reason)s"


class InputFileError(InputError):

    _fmt = "Cannot read %(path)s: %(reason)s"


class BadRange(InputError, ValueError):

    _fmt = "Bad plot range: %(reason)s"


class EmptyInput(InputError, ValueError):

    _fmt = "Nothing to %(action)s"


class UnexpectedFailure(NumericalError):

    _fmt = "%(path)s: unexpected %(kind)s: %(reason)s"
