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

import argparse
import logging
import math
import sys

import yaml
from marshmallow import ValidationError

from . import LOGGER, calculus, core, figures, schema, series, thermo
from .errors import DomainError, MuBoseError
from .schema import Command, Operator, OutputFormat
from .table import Table

USAGE_EXIT = 64
IO_EXIT = 74

GRID_FLAGS = ("mu_min", "mu_max", "steps", "x_min", "x_max", "z_min", "z_max", "points", "mus", "orders")
SCALAR_FLAGS = ("mu", "n", "l", "x", "z", "T", "v", "N", "q", "p", "k", "coeffs", "operator", "order",
                "tol", "max_terms", "format", "output", "factorial", "literal", "figure")


def setup_logger(loglevel=None):
    if loglevel:
        LOGGER.setLevel(getattr(logging, loglevel))
    if LOGGER.handlers:
        return
    handler = logging.StreamHandler()
    formatter = logging.Formatter("{asctime!s}:{levelname!s}: {message!s}", style="{")
    handler.setFormatter(formatter)
    LOGGER.addHandler(handler)


class UsageParser(argparse.ArgumentParser):
    """Argument parser exiting with 64 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, "{!s}: error: {!s}\n".format(self.prog, message))


class CommaSplit(argparse._AppendAction):
    def __call__(self, parser, namespace, values, opt_str):
        for val in values.split(","):
            stripped = val.strip()
            if stripped:
                super(CommaSplit, self).__call__(parser, namespace, stripped, opt_str)


def build_parser():
    parser = UsageParser(prog="mu-bose", description="μ-calculus and μ-Bose gas thermodynamics")
    parser.add_argument("--log", help="Log level", default="WARNING",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", help="Deformation parameter in [0, 1)", type=float)
    common.add_argument("--tol", help="Series tolerance (default: $MU_THERMO_TOL or 1e-12)", type=float)
    common.add_argument("--max-terms", help="Series term budget", type=int, dest="max_terms")
    common.add_argument("--format", help="Output format", choices=[f.value for f in OutputFormat])
    common.add_argument("-o", "--output", help="Output file (default: stdout)")

    literal = argparse.ArgumentParser(add_help=False)
    literal.add_argument("--literal-2.61", help="Use the printed 2.61 for g_3/2(1) at μ=0",
                         dest="literal", action="store_true", default=None)

    commands = parser.add_subparsers(help="What to evaluate", dest="command")
    commands.required = True

    bracket = commands.add_parser("bracket", help="μ-bracket [n]_μ", parents=[common])
    bracket.add_argument("--n", help="Positive integer", type=int, required=True)
    bracket.add_argument("--factorial", help="Also report [n; μ] and [n]_μ!",
                         action="store_true", default=None)

    polylog = commands.add_parser("polylog", help="μ-Bose function g_l^(μ)(z)", parents=[common])
    polylog.add_argument("--l", help="Half-integer order, e.g. 3/2", required=True)
    polylog.add_argument("--z", help="Fugacity in [0, 1]", type=float, required=True)

    deriv = commands.add_parser("deriv", help="Deformed derivative of a polynomial", parents=[common])
    deriv.add_argument("--coeffs", help="Comma-separated coefficients, lowest power first",
                       action=CommaSplit, default=None)
    deriv.add_argument("--operator", help="Operator", choices=[o.value for o in Operator])
    deriv.add_argument("--q", help="Jackson / p,q parameter", type=float)
    deriv.add_argument("--p", help="p of the p,q-derivative", type=float)
    deriv.add_argument("--k", help="Power of the iterated μ-derivative", type=int)
    deriv.add_argument("--x", help="Evaluate the result at x", type=float)

    virial = commands.add_parser("virial", help="Virial coefficients A..D", parents=[common])
    virial.add_argument("--order", help="Reversion order (>= 5)", type=int)

    eos = commands.add_parser("eos", help="Equation of state Pv/kT", parents=[common])
    eos.add_argument("--T", help="Reduced temperature (default 2π)", type=float)
    eos.add_argument("--v", help="Specific volume (default 10)", type=float)

    tc = commands.add_parser("tc", help="Critical temperature", parents=[common, literal])
    tc.add_argument("--v", help="Specific volume (default 1)", type=float)

    thermo_cmd = commands.add_parser("thermo", help="Thermodynamic functions of a state", parents=[common])
    thermo_cmd.add_argument("--T", help="Reduced temperature (default 2π)", type=float)
    thermo_cmd.add_argument("--v", help="Specific volume (default 1)", type=float)
    thermo_cmd.add_argument("--N", help="Particle number (default 1)", type=float)

    figure = commands.add_parser("figure", help="Data behind a figure", parents=[common, literal])
    figure.add_argument("--id", help="Figure id (1-7)", type=int, dest="figure")
    figure.add_argument("--config", help="YAML sweep file")
    figure.add_argument("--mus", help="Comma-separated μ values (figures 2, 3)", action=CommaSplit, default=None)
    figure.add_argument("--mu-min", type=float, dest="mu_min")
    figure.add_argument("--mu-max", type=float, dest="mu_max")
    figure.add_argument("--steps", help="μ intervals", type=int)
    figure.add_argument("--x-min", type=float, dest="x_min")
    figure.add_argument("--x-max", type=float, dest="x_max")
    figure.add_argument("--z-min", type=float, dest="z_min")
    figure.add_argument("--z-max", type=float, dest="z_max")
    figure.add_argument("--points", help="x or z points", type=int)
    figure.add_argument("--orders", help="Comma-separated Bose orders (figure 4)", action=CommaSplit, default=None)
    figure.add_argument("--v", help="Specific volume for fixed-T columns", type=float, dest="grid_v")
    return parser


def load_sweep(path):
    """Read a YAML sweep file: top-level figure/format keys plus a grid mapping."""
    with open(path, "r") as fd:
        data = yaml.safe_load(fd) or {}
    if not isinstance(data, dict):
        raise ValidationError("Sweep file must contain a mapping")
    return data


def config_data(args):
    """Merge the sweep file (if any) with command-line flags into schema input."""
    data = {}
    if getattr(args, "config", None):
        data.update(load_sweep(args.config))
    data["command"] = args.command
    grid = dict(data.get("grid") or {})
    for name in GRID_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            grid[name.replace("_", "-")] = value
    if getattr(args, "grid_v", None) is not None:
        grid["v"] = args.grid_v
    if grid:
        data["grid"] = grid
    for name in SCALAR_FLAGS:
        value = getattr(args, name, None)
        if value is not None:
            data[name.replace("_", "-") if name == "max_terms" else name] = value
    return data


def load_config(data):
    return schema.RunConfigSchema().load(data)


def _bracket(config):
    columns = ["n", "mu", "bracket"]
    row = [config.n, config.mu, core.mu_bracket(config.n, config.mu)]
    if config.factorial:
        columns += ["shift_product", "factorial"]
        row += [core.mu_shift_product(config.n, config.mu), core.mu_factorial(config.n, config.mu)]
    return Table(columns, [[float(c) if not isinstance(c, int) else c for c in row]])


def _polylog(config):
    order = core.BoseOrder.parse(config.l)
    value = core.mu_polylog(order, config.z, config.mu, config.ctl)
    return Table(["l", "z", "mu", "g"], [[str(order), config.z, config.mu, value]])


def _deriv(config):
    poly = calculus.DensePolynomial(config.coeffs)
    op = config.operator
    if op in (Operator.jackson, Operator.pq, Operator.pq_tilde) and config.q is None:
        raise DomainError("--q is required for the {!s} operator".format(op.value))
    if op == Operator.mu:
        result = calculus.mu_derivative(poly, config.mu)
    elif op == Operator.iterated:
        result = calculus.mu_derivative_iterated(poly, config.mu, config.k)
    elif op == Operator.anti:
        result = calculus.mu_antiderivative(poly, config.mu)
    elif op == Operator.jackson:
        result = calculus.jackson_derivative(poly, config.q)
    elif op == Operator.pq:
        result = calculus.pq_derivative(poly, 1.0 if config.p is None else config.p, config.q)
    elif op == Operator.pq_tilde:
        result = calculus.pq_tilde_derivative(poly, 1.0 if config.p is None else config.p, config.q)
    else:
        raise NotImplementedError
    if config.x is not None:
        return Table(["x", "value"], [[config.x, float(result(config.x))]])
    return Table(["power", "coefficient"], [[k, float(c)] for k, c in enumerate(result.coeffs)])


def _relative_gap(exact, approx):
    if exact == 0:
        return abs(approx)
    return abs(exact - approx) / abs(exact)


def _virial(config):
    closed = list(thermo.virial_closed_form(config.mu))
    reverted = series.virial_from_reversion(config.mu, config.order)[:4]
    gap = max(_relative_gap(c, r) for c, r in zip(closed, reverted))
    columns = ["mu", "A", "B", "C", "D", "A_rev", "B_rev", "C_rev", "D_rev", "max_rel_gap"]
    return Table(columns, [[config.mu] + closed + reverted + [gap]])


def _eos(config):
    T = 2 * math.pi if config.T is None else config.T
    v = 10.0 if config.v is None else config.v
    state = thermo.GasState.from_density(config.mu, T, v, config.ctl)
    pv = thermo.pressure(state, config.ctl) * v / T
    pv_virial = thermo.virial_closed_form(config.mu).equation_of_state(state.density_ratio)
    columns = ["mu", "T", "v", "y", "z", "regime", "pv", "pv_virial"]
    return Table(columns, [[config.mu, T, v, state.density_ratio, state.z, state.regime.value, pv, pv_virial]])


def _tc(config):
    v = 1.0 if config.v is None else config.v
    tc = thermo.critical_temperature(v, config.mu, config.ctl)
    ratio = thermo.tc_ratio(config.mu, config.literal, config.ctl)
    return Table(["mu", "v", "tc", "tc_ratio"], [[config.mu, v, tc, ratio]])


def _thermo(config):
    T = 2 * math.pi if config.T is None else config.T
    v = 1.0 if config.v is None else config.v
    N = 1.0 if config.N is None else config.N
    state = thermo.GasState.from_density(config.mu, T, v, config.ctl)
    columns = ["mu", "T", "v", "regime", "z", "pressure", "energy_per_particle",
               "cv", "entropy", "condensate_fraction"]
    row = [config.mu, T, v, state.regime.value, state.z,
           thermo.pressure(state, config.ctl),
           thermo.internal_energy(state, N, config.ctl) / N,
           thermo.specific_heat(state, config.ctl),
           thermo.entropy(state, config.ctl),
           thermo.condensate_fraction(state, ctl=config.ctl)]
    return Table(columns, [row])


def _figure(config):
    return figures.emit_figure(config.figure, config.grid)


COMMANDS = {
    Command.bracket: _bracket,
    Command.polylog: _polylog,
    Command.deriv: _deriv,
    Command.virial: _virial,
    Command.eos: _eos,
    Command.tc: _tc,
    Command.thermo: _thermo,
    Command.figure: _figure,
}


def write_table(table, config, stream=None):
    if config.format == OutputFormat.json:
        from mubose.writers.json_table import JsonWriter
        writer = JsonWriter()
    elif config.format == OutputFormat.csv:
        from mubose.writers.csv_table import CsvWriter
        writer = CsvWriter()
    else:
        raise NotImplementedError

    if config.output_path:
        with open(config.output_path, "w", newline="") as f_out:
            writer.write(table, f_out)
        LOGGER.info("Wrote %d rows to %r", len(table), config.output_path)
    else:
        writer.write(table, stream or sys.stdout)


def run(config, stream=None):
    """Evaluate one command and write its table.

    :param mubose.schema.RunConfig config: Validated configuration
    :param stream: Text stream used instead of stdout
    :return: Exit code (0, 2 domain, 3 convergence/divergence, 74 output not writable)
    :rtype: int
    """
    try:
        table = COMMANDS[config.command](config)
    except MuBoseError as err:
        print("mu-bose: {!s}: {!s}".format(type(err).__name__, err), file=sys.stderr)
        return err.exit_code
    try:
        write_table(table, config, stream)
    except OSError as err:
        print("mu-bose: cannot write output: {!s}".format(err), file=sys.stderr)
        return IO_EXIT
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logger(args.log)

    try:
        config = load_config(config_data(args))
    except (ValidationError, OSError, yaml.YAMLError) as err:
        message = err.messages if isinstance(err, ValidationError) else err
        print("mu-bose: usage error: {!s}".format(message), file=sys.stderr)
        return USAGE_EXIT
    except MuBoseError as err:
        print("mu-bose: {!s}: {!s}".format(type(err).__name__, err), file=sys.stderr)
        return err.exit_code
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
