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

# pylint: disable=too-few-public-methods,no-self-use

import enum

from marshmallow import Schema, post_load, validates, validates_schema, ValidationError
from marshmallow.fields import Boolean, Float, Integer, List, Nested, Raw, String
from marshmallow_enum import EnumField as Enum

from . import core, figures, utils
from .errors import DomainError


class Command(enum.Enum):
    bracket = "bracket"
    polylog = "polylog"
    deriv = "deriv"
    virial = "virial"
    eos = "eos"
    tc = "tc"
    thermo = "thermo"
    figure = "figure"


class OutputFormat(enum.Enum):
    csv = "csv"
    json = "json"


class Operator(enum.Enum):
    mu = "mu"
    iterated = "iterated"
    anti = "anti"
    jackson = "jackson"
    pq = "pq"
    pq_tilde = "pq-tilde"


def _check_mu(value):
    if not 0 <= value < 1:
        raise ValidationError("mu must lie in [0, 1), got {!r}".format(value))


class RunConfig(object):
    def __init__(self, command, mu=None, n=None, l=None, x=None, z=None, T=None, v=None, N=None,
                 q=None, p=None, k=1, coeffs=None, operator=Operator.mu, order=6, tol=None,
                 max_terms=core.DEFAULT_MAX_TERMS, format=OutputFormat.csv, output_path=None,
                 factorial=False, literal=False, figure=None, grid=None):
        """
        :param Command command: What to evaluate
        :param float mu: Deformation parameter
        :param float tol: Series tolerance (None: MU_THERMO_TOL or 1e-12)
        :param OutputFormat format: csv or json
        :param str output_path: File to write instead of stdout
        :param mubose.figures.FigureGrid grid: Figure grid
        """
        self.command = command
        self.mu = 0.0 if mu is None else mu
        self.n = n
        self.l = l
        self.x = x
        self.z = z
        self.T = T
        self.v = v
        self.N = N
        self.q = q
        self.p = p
        self.k = k
        self.coeffs = coeffs or []
        self.operator = operator
        self.order = order
        self.tol = utils.default_tolerance() if tol is None else tol
        self.max_terms = max_terms
        self.format = format
        self.output_path = output_path
        self.factorial = factorial
        self.literal = literal
        self.figure = figure
        self.ctl = core.SummationControl(self.tol, self.max_terms)
        self.grid = grid or figures.FigureGrid()
        self.grid.ctl = self.ctl
        self.grid.literal = self.grid.literal or literal
        if self.grid.mu is None and mu is not None:
            self.grid.mu = mu

    def __repr__(self): # pragma: no cover
        return "<RunConfig {0.command.value} mu={0.mu!r} format={0.format.value}>".format(self)


class SweepSchema(Schema):
    mu = Float()
    mus = List(Float())
    mu_min = Float(data_key="mu-min")
    mu_max = Float(data_key="mu-max")
    steps = Integer()
    x_min = Float(data_key="x-min")
    x_max = Float(data_key="x-max")
    z_min = Float(data_key="z-min")
    z_max = Float(data_key="z-max")
    points = Integer()
    orders = List(Raw())
    v = Float()
    literal = Boolean()

    @validates_schema
    def validate_grid(self, data, **kwargs):
        for name in ("mu", "mu_min", "mu_max"):
            if name in data:
                _check_mu(data[name])
        for value in data.get("mus", []):
            _check_mu(value)
        if data.get("mu_min", 0.0) > data.get("mu_max", 0.9):
            raise ValidationError("mu-min must not exceed mu-max")
        if "steps" in data and data["steps"] < 1:
            raise ValidationError("steps must be positive", "steps")
        if "points" in data and data["points"] < 2:
            raise ValidationError("points must be at least 2", "points")
        for order in data.get("orders", []):
            try:
                core.BoseOrder.parse(order)
            except DomainError:
                raise ValidationError("Invalid Bose order {!r}".format(order), "orders")

    @post_load
    def make_object(self, data, **kwargs):
        return figures.FigureGrid(**data)


class RunConfigSchema(Schema):
    command = Enum(Command, by_value=True, required=True)
    mu = Float()
    n = Integer()
    l = String()
    x = Float()
    z = Float()
    T = Float()
    v = Float()
    N = Float()
    q = Float()
    p = Float()
    k = Integer()
    coeffs = List(Float())
    operator = Enum(Operator, by_value=True)
    order = Integer()
    tol = Float()
    max_terms = Integer(data_key="max-terms")
    format = Enum(OutputFormat, by_value=True)
    output_path = String(data_key="output")
    factorial = Boolean()
    literal = Boolean()
    figure = Integer()
    grid = Nested(SweepSchema)

    @validates("mu")
    def validate_mu(self, value, **kwargs):
        _check_mu(value)

    @validates("tol")
    def validate_tol(self, value, **kwargs):
        if not value > 0:
            raise ValidationError("tol must be positive")

    @validates("max_terms")
    def validate_max_terms(self, value, **kwargs):
        if value < 1:
            raise ValidationError("max-terms must be positive")

    @validates_schema
    def validate_command(self, data, **kwargs):
        command = data["command"]
        if command == Command.virial and data.get("order", 6) < 5:
            raise ValidationError("virial needs order >= 5", "order")
        if command == Command.figure and data.get("figure") not in figures.FIGURES:
            raise ValidationError("figure needs --id in {!r}".format(sorted(figures.FIGURES)), "figure")
        if command == Command.bracket and data.get("n") is None:
            raise ValidationError("bracket needs --n", "n")
        if command == Command.polylog and (data.get("l") is None or data.get("z") is None):
            raise ValidationError("polylog needs --l and --z")
        if command == Command.deriv and not data.get("coeffs"):
            raise ValidationError("deriv needs --coeffs", "coeffs")

    @post_load
    def make_object(self, data, **kwargs):
        return RunConfig(**data)
