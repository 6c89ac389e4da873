#!/usr/bin/env python3
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

"""optrig computes the turning angles of symmetric positive definite
matrices"""

from setuptools import setup

import optrig


with open("README.rst") as readme:
    long_description = readme.read()


setup(
    name = "optrig",
    version = optrig.__version__,
    description = "Antieigenvalues and turning angles of symmetric positive"
                  " definite matrices",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    license = "GNU GPL v2 or later",
    scripts = [
        "optrig-report",
        ],
    packages = ["optrig",
                "optrig.commands",
                "optrig.templates",
                "optrig.tests"],
    package_data = {"optrig": ["templates/*.pt"]},
    install_requires=['numpy', 'configobj', 'SimpleTAL'],
    tests_require=['testtools', 'fixtures'],
    test_suite='optrig.tests.test_suite',
    )
