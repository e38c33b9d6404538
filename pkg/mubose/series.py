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

"""Truncated power series and the virial expansion obtained by reversion."""

import numbers

import numpy as np

from . import LOGGER
from .core import BoseOrder, as_mu, polylog_coefficients
from .errors import DomainError

__all__ = ["TruncatedPowerSeries", "multiply", "compose", "revert",
           "euler", "inverse_euler", "bose_series", "virial_from_reversion"]

MIN_VIRIAL_ORDER = 5


class TruncatedPowerSeries(object):
    """c_0 + c_1 z + ... + c_K z^K; coefficients beyond K are unknown."""

    def __init__(self, coeffs, order=None):
        """
        :param coeffs: Coefficients c_0, c_1, ...
        :param int order: Truncation order K (defaults to len(coeffs) - 1)
        """
        coeffs = np.asarray(coeffs, dtype=float)
        if coeffs.ndim != 1:
            raise DomainError("Series coefficients must be a flat sequence")
        if order is None:
            order = coeffs.size - 1
        if isinstance(order, bool) or not isinstance(order, numbers.Integral) or order < 1:
            raise DomainError("Series order must be a positive integer, got {!r}".format(order))
        padded = np.zeros(order + 1)
        size = min(coeffs.size, order + 1)
        padded[:size] = coeffs[:size]
        padded.setflags(write=False)
        self.coeffs = padded
        self.order = int(order)

    @classmethod
    def from_function(cls, fn, order):
        """Series whose coefficient k is fn(k), k = 0..order."""
        return cls([fn(k) for k in range(order + 1)], order)

    @classmethod
    def variable(cls, order):
        return cls([0.0, 1.0], order)

    def __repr__(self): # pragma: no cover
        return "<TruncatedPowerSeries O(z^{:d}) {!r}>".format(self.order + 1, self.coeffs.tolist())

    def __getitem__(self, k):
        return float(self.coeffs[k])

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return (float(c) for c in self.coeffs)

    def _common(self, other):
        order = min(self.order, other.order)
        return order, self.coeffs[:order + 1], other.coeffs[:order + 1]

    def __add__(self, other):
        if isinstance(other, numbers.Real):
            other = TruncatedPowerSeries([other], self.order)
        if not isinstance(other, TruncatedPowerSeries):
            return NotImplemented
        order, a, b = self._common(other)
        return TruncatedPowerSeries(a + b, order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries(-self.coeffs, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, numbers.Real):
            return TruncatedPowerSeries(self.coeffs * other, self.order)
        if isinstance(other, TruncatedPowerSeries):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, z):
        """Evaluate the truncated polynomial at z (Horner)."""
        value = 0.0
        for c in reversed(self.coeffs):
            value = value * z + c
        return value

    def allclose(self, other, atol=1e-12):
        order, a, b = self._common(other)
        return bool(np.all(np.abs(a - b) <= atol))


def multiply(a, b):
    """Cauchy product truncated at the smaller order."""
    order, x, y = a._common(b)
    return TruncatedPowerSeries(np.convolve(x, y)[:order + 1], order)


def compose(outer, inner):
    """outer(inner(z)) by Horner's scheme; inner must have no constant term."""
    if inner.coeffs[0] != 0:
        raise DomainError("Cannot compose with an inner series that has a constant term")
    order = min(outer.order, inner.order)
    inner = TruncatedPowerSeries(inner.coeffs, order)
    result = TruncatedPowerSeries([outer.coeffs[order]], order)
    for k in range(order - 1, -1, -1):
        result = multiply(result, inner) + float(outer.coeffs[k])
    return result


def revert(f):
    """Functional inverse g with g(f(z)) = z to the order of f.

    Coefficients are fixed one at a time: adding g_n z^n to g changes the
    z^n coefficient of g(f) by g_n c_1^n and leaves lower orders untouched.
    """
    if f.coeffs[0] != 0:
        raise DomainError("Series reversion needs c_0 = 0")
    c1 = float(f.coeffs[1])
    if c1 == 0:
        raise DomainError("Series reversion needs c_1 != 0")
    g = np.zeros(f.order + 1)
    g[1] = 1 / c1
    for n in range(2, f.order + 1):
        residual = compose(TruncatedPowerSeries(g, n), TruncatedPowerSeries(f.coeffs, n))
        g[n] = -residual[n] / c1 ** n
    LOGGER.debug("Reverted series of order %d", f.order)
    return TruncatedPowerSeries(g, f.order)


def euler(f):
    """z d/dz: coefficient n multiplied by n."""
    n = np.arange(f.order + 1)
    return TruncatedPowerSeries(f.coeffs * n, f.order)


def inverse_euler(f):
    """(z d/dz)^-1: coefficient n divided by n, n >= 1."""
    if f.coeffs[0] != 0:
        raise DomainError("(z d/dz)^-1 is not defined on a nonzero constant term")
    n = np.arange(1, f.order + 1)
    return TruncatedPowerSeries(np.concatenate(([0.0], f.coeffs[1:] / n)), f.order)


def bose_series(l, mu, order):
    """Σ_{n=1..K} [n]_μ z^n / n^(l+1), the truncated g_l^(μ)."""
    coeffs = polylog_coefficients(BoseOrder.parse(l), mu, order)
    return TruncatedPowerSeries(np.concatenate(([0.0], coeffs)), order)


def virial_from_reversion(mu, order=6):
    """Virial coefficients A, B, C, D, ... of Pv/kT in powers of λ³/v.

    The density series λ³/v = g_{3/2}(z) (leading coefficient [1]_μ kept) is
    reverted to z(λ³/v) and substituted into g_{5/2} = (z d/dz)^-1 g_{3/2};
    dividing by λ³/v leaves 1 + A y + B y^2 + ...

    :param mu: μ (real or DeformationParameter)
    :param int order: Series order K >= 5
    :return: The K - 1 coefficients following the leading 1
    :rtype: list
    """
    mu = float(as_mu(mu))
    if isinstance(order, bool) or not isinstance(order, numbers.Integral) or order < MIN_VIRIAL_ORDER:
        raise DomainError("Virial reversion needs order >= {:d}, got {!r}".format(MIN_VIRIAL_ORDER, order))
    density = bose_series(BoseOrder(3, 2), mu, order)
    pressure = inverse_euler(density)
    fugacity = revert(density)
    pv = compose(pressure, fugacity)
    # pv = y + A y^2 + ... ; drop the division by y by shifting
    return [float(c) for c in pv.coeffs[2:]]
