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

import os

from fixtures import Fixture, TempDir
import numpy as np


def random_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def random_spd(rng, n, max_condition=100.0):
    """A random SPD matrix and its ascending eigenvalues.

    The eigenvalues are log-uniform in ``[1, max_condition]`` with both end
    points included, so the condition number is exactly ``max_condition``.
    """
    values = np.exp(rng.uniform(0.0, np.log(max_condition), n))
    values[0] = 1.0
    values[-1] = max_condition
    values.sort()
    q = random_orthogonal(rng, n)
    a = (q * values) @ q.T
    return 0.5 * (a + a.T), values


def random_unit_vectors(rng, count, n):
    v = rng.standard_normal((count, n))
    return v / np.linalg.norm(v, axis=1)[:, None]


def format_matrix(rows):
    lines = ['%d' % len(rows)]
    for row in rows:
        lines.append(' '.join('%.17g' % value for value in row))
    return '\n'.join(lines) + '\n'


class SampleFiles(Fixture):
    """A temporary directory to write input files into."""

    def setUp(self):
        Fixture.setUp(self)
        self.path = self.useFixture(TempDir()).path

    def join(self, name):
        return os.path.join(self.path, name)

    def write(self, name, text):
        path = self.join(name)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def write_matrix(self, name, rows):
        return self.write(name, format_matrix(rows))

    def read(self, name):
        with open(self.join(name), encoding='utf-8') as f:
            return f.read()
