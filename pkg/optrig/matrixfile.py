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

"""Reading matrices from text files.

The format is a line holding the order ``n`` followed by ``n`` rows of
``n`` whitespace separated reals.  Blank lines and lines starting with
``#`` are ignored.  For example::

    # diag(1, 4)
    2
    1 0
    0 4
"""

import logging
import math
import re

from .errors import FormatError, InputFileError
from .spectral import DEFAULT_SYM_TOL, validate_spd

log = logging.getLogger("optrig.matrixfile")

_token_re = re.compile(r'\S+')


def _tokens(line):
    return [(m.start() + 1, m.group()) for m in _token_re.finditer(line)]


def parse_matrix_text(text, path='<string>'):
    """Return the rows of the matrix in ``text`` as lists of floats."""
    lines = [(number, line) for number, line in
             enumerate(text.splitlines(), 1)
             if line.strip() and not line.lstrip().startswith('#')]
    if not lines:
        raise FormatError(path=path, line=1, column=1,
                          reason='missing matrix order')
    number, header = lines[0]
    tokens = _tokens(header)
    try:
        if len(tokens) != 1:
            raise ValueError
        n = int(tokens[0][1])
    except ValueError:
        raise FormatError(path=path, line=number, column=tokens[0][0],
                          reason='expected the matrix order on a line of'
                                 ' its own')
    if n < 1:
        raise FormatError(path=path, line=number, column=tokens[0][0],
                          reason='matrix order must be positive')
    body = lines[1:]
    rows = []
    for number, line in body[:n]:
        tokens = _tokens(line)
        if len(tokens) != n:
            column = tokens[n][0] if len(tokens) > n else len(line) + 1
            raise FormatError(path=path, line=number, column=column,
                              reason='expected %d entries, found %d' % (
                                  n, len(tokens)))
        row = []
        for column, token in tokens:
            try:
                value = float(token)
            except ValueError:
                raise FormatError(path=path, line=number, column=column,
                                  reason='%r is not a number' % (token,))
            if not math.isfinite(value):
                raise FormatError(path=path, line=number, column=column,
                                  reason='%r is not finite' % (token,))
            row.append(value)
        rows.append(row)
    if len(rows) < n:
        last = body[-1][0] if body else number
        raise FormatError(path=path, line=last + 1, column=1,
                          reason='expected %d rows, found %d' % (n, len(rows)))
    if len(body) > n:
        number, line = body[n]
        raise FormatError(path=path, line=number, column=_tokens(line)[0][0],
                          reason='more than %d rows' % n)
    return rows


def read_text(path):
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise InputFileError(path=path, reason=getattr(e, 'strerror', None)
                             or str(e))


def parse_matrix_file(path, sym_tol=DEFAULT_SYM_TOL):
    """Read ``path`` and validate it as a symmetric positive definite
    matrix."""
    rows = parse_matrix_text(read_text(path), path)
    log.debug('read a matrix of order %d from %s', len(rows), path)
    return validate_spd(rows, sym_tol=sym_tol)
