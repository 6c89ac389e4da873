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
"""SVG documents from the page templates in `optrig.templates`.

Templates are compiled with simpleTAL on first use and recompiled when
the file on disk changes.
"""

import importlib.resources
import logging
import os
import re
import time
from io import StringIO

from simpletal import simpleTAL, simpleTALES

log = logging.getLogger("optrig.zptsupport")

TEMPLATE_PACKAGE = 'optrig.templates'
XML_DECLARATION = '<?xml version="1.0" encoding="utf-8"?>\n'

_compiled = {}


def _squeeze(text):
    # Indentation inside the templates is for the reader only.
    text = re.sub(r'\s*\n\s*', '\n', text)
    return re.sub(r'[ \t]+', ' ', text)


def template_path(name):
    """Path of template ``name`` (without ``.pt``) in the template package."""
    return str(importlib.resources.files(TEMPLATE_PACKAGE).joinpath(
        '%s.pt' % (name,)))


class SvgTemplate(object):
    """A compiled template and the stat of the file it came from."""

    def __init__(self, name, path, stat, compiled):
        self.name = name
        self.path = path
        self.stat = stat
        self.compiled = compiled

    def expand(self, **info):
        context = simpleTALES.Context(allowPythonPath=0)
        for key in sorted(info):
            context.addGlobal(key, info[key])
        out = StringIO()
        self.compiled.expandInline(context, out)
        return out.getvalue()

    def render(self, **info):
        """A standalone SVG document, newline terminated."""
        start = time.time()
        text = XML_DECLARATION + self.expand(**info).strip() + '\n'
        log.debug('Rendering %s: %.3f secs, %s bytes', self.name,
                  time.time() - start, len(text.encode('utf-8')))
        return text


def svg_template(name):
    """The `SvgTemplate` called ``name``, compiling it when needed."""
    path = template_path(name)
    stat = os.stat(path)
    template = _compiled.get(name)
    if template is None or template.stat != stat:
        with open(path, encoding='utf-8') as f:
            compiled = simpleTAL.compileXMLTemplate(_squeeze(f.read()))
        template = _compiled[name] = SvgTemplate(name, path, stat, compiled)
        log.debug('compiled template %s', path)
    return template
