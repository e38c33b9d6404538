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

__all__ = ["MuBoseError", "DomainError", "StateError",
           "ConvergenceError", "DivergenceError", "NumericError"]


class MuBoseError(Exception):
    """Base class for every error raised by the library."""
    exit_code = 1


class DomainError(MuBoseError, ValueError):
    """Argument lies outside the domain of the operation."""
    exit_code = 2


class StateError(MuBoseError, ValueError):
    """Gas state whose regime and fugacity disagree."""
    exit_code = 2


class ConvergenceError(MuBoseError, ArithmeticError):
    """Term budget exhausted before the tail bound reached the tolerance."""
    exit_code = 3


class DivergenceError(MuBoseError, ArithmeticError):
    """The requested series provably diverges."""
    exit_code = 3


class NumericError(MuBoseError, ArithmeticError):
    exit_code = 3
