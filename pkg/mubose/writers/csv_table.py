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

import csv

from .. import LOGGER
from ..table import format_value


class CsvWriter(object):
    """Write a table as CSV: header row, comma separator, LF line endings."""

    def write(self, table, fd):
        """
        :param mubose.table.Table table: Table to write
        :param fd: Text stream
        """
        writer = csv.writer(fd, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table:
            writer.writerow([format_value(cell) for cell in row])
        LOGGER.debug("Wrote %d CSV rows", len(table))
