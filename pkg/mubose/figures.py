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

"""Data tables behind the figures: derivatives, elementary functions,
Bose functions, Tc ratio, specific heat and entropy against μ."""

import math

import numpy as np

from . import LOGGER, calculus, core, thermo
from .errors import DomainError, MuBoseError
from .table import Table, format_value

__all__ = ["FigureGrid", "emit_figure", "FIGURES"]


class FigureGrid(object):
    def __init__(self, mu=None, mus=None, mu_min=0.0, mu_max=0.9, steps=90,
                 x_min=None, x_max=None, z_min=0.0, z_max=0.95, points=41,
                 orders=(0, 1, 2, 5), v=1.0, literal=False, ctl=None):
        """
        :param float mu: Single μ (figures 1 and 4)
        :param list mus: μ values drawn as separate curves (figures 2 and 3)
        :param float mu_min: Start of the μ sweep (figures 5 to 7)
        :param float mu_max: End of the μ sweep
        :param int steps: Number of μ intervals
        :param float x_min: Start of the x grid (figures 1 to 3)
        :param float x_max: End of the x grid
        :param float z_min: Start of the fugacity grid (figure 4)
        :param float z_max: End of the fugacity grid
        :param int points: Number of x or z points
        :param orders: Bose orders (figure 4)
        :param float v: Specific volume for the fixed-temperature columns
        :param bool literal: Use the printed 2.61 in the Tc ratio
        :param SummationControl ctl: Series tolerance and budget
        """
        if steps < 1 or points < 2:
            raise DomainError("Grids need steps >= 1 and points >= 2")
        self.mu = mu
        self.mus = list(mus) if mus else [0.0, 0.3, 0.6]
        self.mu_min = mu_min
        self.mu_max = mu_max
        self.steps = steps
        self.x_min = x_min
        self.x_max = x_max
        self.z_min = z_min
        self.z_max = z_max
        self.points = points
        self.orders = [core.BoseOrder.parse(l) for l in orders]
        self.v = v
        self.literal = literal
        self.ctl = ctl

    def __repr__(self): # pragma: no cover
        return "<FigureGrid mu={0.mu!r} mus={0.mus!r} steps={0.steps!r} points={0.points!r}>".format(self)

    def x_grid(self, lo, hi):
        lo = self.x_min if self.x_min is not None else lo
        hi = self.x_max if self.x_max is not None else hi
        return np.linspace(lo, hi, self.points).tolist()

    def z_grid(self):
        return np.linspace(self.z_min, self.z_max, self.points).tolist()

    def mu_grid(self):
        return np.linspace(self.mu_min, self.mu_max, self.steps + 1).tolist()


def _sweep(columns, grid, row_fn):
    table = Table(columns)
    for point in grid:
        try:
            table.append([point] + list(row_fn(point)))
        except MuBoseError as err:
            LOGGER.debug("Omitting row at %r: %s", point, err)
            table.skipped += 1
    if table.skipped:
        LOGGER.warning("Omitted %d out-of-domain rows", table.skipped)
    return table


def _label(prefix, value):
    return "{!s}_{!s}".format(prefix, format_value(float(value)))


def derivatives(grid):
    """Ordinary and μ-derivatives of x³, ln(1+x) and exp(x)."""
    mu = 0.7 if grid.mu is None else grid.mu
    cube = calculus.mu_derivative(calculus.DensePolynomial.monomial(3), mu)
    rule = calculus.QuadratureRule.gauss_legendre()

    def row(x):
        if x <= -1:
            raise DomainError("ln(1+x) needs x > -1")
        return [3 * x ** 2, float(cube(x)),
                1 / (1 + x),
                calculus.mu_derivative_numeric(math.log1p, x, mu, rule, fprime=lambda s: 1 / (1 + s)),
                math.exp(x),
                calculus.mu_derivative_numeric(math.exp, x, mu, rule, fprime=math.exp)]

    columns = ["x", "d_x3", "dmu_x3", "d_log1p", "dmu_log1p", "d_exp", "dmu_exp"]
    return _sweep(columns, grid.x_grid(0.0, 2.0), row)


def exponentials(grid):
    columns = ["x"] + [_label("exp_mu", mu) for mu in grid.mus]
    return _sweep(columns, grid.x_grid(-1.0, 1.5),
                  lambda x: [core.mu_exp(x, mu, grid.ctl) for mu in grid.mus])


def logarithms(grid):
    columns = ["x"] + [_label("ln_mu", mu) for mu in grid.mus]
    return _sweep(columns, grid.x_grid(0.05, 1.95),
                  lambda x: [core.mu_ln(x, mu, grid.ctl) for mu in grid.mus])


def bose_functions(grid):
    mu = 0.4 if grid.mu is None else grid.mu
    columns = ["z"] + ["g_{!s}".format(l) for l in grid.orders]
    return _sweep(columns, grid.z_grid(),
                  lambda z: [core.mu_polylog(l, z, mu, grid.ctl) for l in grid.orders])


def tc_ratios(grid):
    return _sweep(["mu", "tc_ratio"], grid.mu_grid(),
                  lambda mu: [thermo.tc_ratio(mu, grid.literal, grid.ctl)])


def _condensed_columns(grid, scale, per_particle):
    """Columns for a quantity proportional to (v/λ³) g_{5/2}(1) below Tc.

    scale · g_{5/2}(1) is the value multiplied by λ³/V; the other two are
    per particle at T = Tc of the undeformed gas (for grid.v) and at Tc(μ).
    """
    fixed_T = thermo.critical_temperature(grid.v, 0.0, grid.ctl)

    def row(mu):
        g52 = core.mu_polylog(thermo.FIVE_HALVES, 1.0, mu, grid.ctl)
        state = thermo.GasState.from_density(mu, fixed_T, grid.v, grid.ctl)
        at_tc = thermo.GasState(mu, thermo.critical_temperature(grid.v, mu, grid.ctl), grid.v, 1.0)
        return [scale * g52, per_particle(state, grid.ctl), per_particle(at_tc, grid.ctl)]
    return row


def specific_heats(grid):
    columns = ["mu", "cv_scaled", "cv_fixed_T", "cv_at_tc"]
    return _sweep(columns, grid.mu_grid(), _condensed_columns(grid, 3.75, thermo.specific_heat))


def entropies(grid):
    columns = ["mu", "s_scaled", "s_fixed_T", "s_at_tc"]
    return _sweep(columns, grid.mu_grid(), _condensed_columns(grid, 2.5, thermo.entropy))


FIGURES = {
    1: derivatives,
    2: exponentials,
    3: logarithms,
    4: bose_functions,
    5: tc_ratios,
    6: specific_heats,
    7: entropies,
}


def emit_figure(figure_id, grid=None):
    """Table of the data behind one figure.

    :param int figure_id: 1..7
    :param FigureGrid grid: Grid parameters
    :rtype: mubose.table.Table
    """
    try:
        builder = FIGURES[figure_id]
    except KeyError:
        raise DomainError("Unknown figure id {!r}, expected one of {!r}".format(figure_id, sorted(FIGURES)))
    return builder(grid or FigureGrid())
