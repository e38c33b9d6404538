# -*- coding: utf-8 -*-
#
# Copyright © 2016 The mu-bose authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.

import json

from .. import LOGGER
from ..table import format_value


def _cell(value):
    # same digits as the CSV output
    if isinstance(value, float) and value == value and abs(value) != float("inf"):
        return float(format_value(value))
    if isinstance(value, float):
        return format_value(value)
    return value


class JsonWriter(object):
    """Write a table as a JSON array of row objects."""

    def write(self, table, fd):
        records = [{name: _cell(cell) for name, cell in zip(table.columns, row)} for row in table]
        json.dump(records, fd, indent=2)
        fd.write("\n")
        LOGGER.debug("Wrote %d JSON records", len(records))
