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

"""CSV exports of stress fields and triple lists."""

import csv
import logging

from .errors import InputFileError
from .pythagorean import pyth_trig

log = logging.getLogger("optrig.export")

FIELD_COLUMNS = ['i', 'j', 'x', 'z', 'sigma_xx', 'sigma_xz', 'sigma_zz',
                 'r1', 'r2']
TRIPLE_COLUMNS = ['m', 'n', 'a', 'b', 'c', 'cos_num', 'cos_den', 'sin_num',
                  'sin_den']


def _cell(value):
    if isinstance(value, float):
        # NaN marks boundary nodes without a residual
        return '' if value != value else '%.17g' % value
    return str(value)


def _write_rows(path, header, rows):
    try:
        with open(path, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([_cell(value) for value in row])
                count += 1
    except OSError as e:
        raise InputFileError(path=path, reason=e.strerror or str(e))
    log.debug('wrote %d rows to %s', count, path)
    return count


def write_field_csv(field, residual, path):
    """One row per grid node; r1 and r2 are empty on the boundary."""
    def rows():
        for i in range(field.nx):
            for j in range(field.nz):
                x, z = field.coordinates(i, j)
                yield [i, j, x, z,
                       float(field.sigma_xx[i, j]),
                       float(field.sigma_xz[i, j]),
                       float(field.sigma_zz[i, j]),
                       float(residual.r1[i, j]),
                       float(residual.r2[i, j])]
    return _write_rows(path, FIELD_COLUMNS, rows())


def write_triples_csv(triples, path):
    """``triples`` is a list of ``(TripleParams, PythTriple)`` pairs."""
    def rows():
        for params, triple in triples:
            cos_phi, sin_phi = pyth_trig(params)
            yield [params.m, params.n, triple.a, triple.b, triple.c,
                   cos_phi.numerator, cos_phi.denominator,
                   sin_phi.numerator, sin_phi.denominator]
    return _write_rows(path, TRIPLE_COLUMNS, rows())
