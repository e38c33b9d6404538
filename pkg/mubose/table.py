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

import collections.abc

__all__ = ["Table"]

SIGNIFICANT_DIGITS = 15


def format_value(value):
    """Locale-independent text for one cell, 15 significant digits."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value != value:
            return "nan"
        if value in (float("inf"), float("-inf")):
            return "inf" if value > 0 else "-inf"
        text = "{:.{}g}".format(value, SIGNIFICANT_DIGITS)
        return "0" if text == "-0" else text
    return str(value)


class Table(collections.abc.Sequence):
    """Rows of equal width under a header; columns are addressable by name."""

    def __init__(self, columns, rows=(), skipped=0):
        """
        :param list columns: Column names
        :param rows: Iterable of row sequences
        :param int skipped: Rows omitted because they fell outside a domain
        """
        self.columns = list(columns)
        self.rows = []
        self.skipped = skipped
        for row in rows:
            self.append(row)

    def __repr__(self): # pragma: no cover
        return "<Table {!r}: {:d} rows>".format(self.columns, len(self.rows))

    def append(self, row):
        row = list(row)
        if len(row) != len(self.columns):
            raise ValueError("Row has {:d} cells, table has {:d} columns".format(len(row), len(self.columns)))
        self.rows.append(row)

    def __getitem__(self, key):
        if isinstance(key, str):
            try:
                index = self.columns.index(key)
            except ValueError:
                raise KeyError(key)
            return [row[index] for row in self.rows]
        return self.rows[key]

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        for row in self.rows:
            yield row

    def __contains__(self, key):
        if isinstance(key, str):
            return key in self.columns
        return key in self.rows

    @property
    def records(self):
        """Rows as dicts keyed by column name."""
        return [dict(zip(self.columns, row)) for row in self.rows]
