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
#

from fractions import Fraction
import json
import math

import numpy as np


def format_float(value):
    """17 significant digits, always recognisable as a float."""
    if not math.isfinite(value):
        return 'null'
    text = '%.17g' % value
    if all(ch in '-0123456789' for ch in text):
        text += '.0'
    return text


def convert_to_json_ready(obj):
    """Reduce report objects to dicts, lists, strings, ints and floats."""
    if hasattr(obj, 'as_dict'):
        return convert_to_json_ready(obj.as_dict())
    if isinstance(obj, dict):
        return dict((str(k), convert_to_json_ready(v)) for k, v in obj.items())
    if isinstance(obj, Fraction):
        return {'numerator': obj.numerator,
                'denominator': obj.denominator,
                'value': float(obj)}
    if isinstance(obj, np.ndarray):
        return [convert_to_json_ready(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [convert_to_json_ready(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, bytes):
        return obj.decode('UTF-8')
    raise TypeError(repr(obj) + " is not JSON serializable")


def _encode(obj, indent, level):
    pad = ' ' * (indent * (level + 1))
    end = ' ' * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = ['%s%s: %s' % (pad, json.dumps(k), _encode(v, indent, level + 1))
                 for k, v in obj.items()]
        return '{\n%s\n%s}' % (',\n'.join(items), end)
    if isinstance(obj, list):
        if not obj:
            return '[]'
        if all(not isinstance(v, (dict, list)) for v in obj):
            return '[%s]' % ', '.join(_encode(v, indent, level) for v in obj)
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return '[\n%s\n%s]' % (',\n'.join(items), end)
    if isinstance(obj, float):
        return format_float(obj)
    return json.dumps(obj)


def dumps_json(obj, indent=2):
    """Serialise ``obj`` with floats written to 17 significant digits."""
    return _encode(convert_to_json_ready(obj), indent, 0) + '\n'

