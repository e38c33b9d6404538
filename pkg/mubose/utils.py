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

import os

from . import LOGGER
from .core import DEFAULT_TOL

TOL_ENV = "MU_THERMO_TOL"


def default_tolerance():
    """Series tolerance from $MU_THERMO_TOL, falling back to 1e-12.

    :rtype: float
    """
    raw = os.environ.get(TOL_ENV)
    if not raw:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        LOGGER.warning("Ignoring %s=%r: not a number", TOL_ENV, raw)
        return DEFAULT_TOL
    if not tol > 0:
        LOGGER.warning("Ignoring %s=%r: tolerance must be positive", TOL_ENV, raw)
        return DEFAULT_TOL
    return tol

