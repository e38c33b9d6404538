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

"""Thermodynamics of the μ-Bose gas in reduced units (ħ = m = k_B = 1)."""

import enum
import math

from scipy import optimize

from . import LOGGER
from .core import BoseOrder, as_mu, mu_bracket, mu_polylog
from .errors import DivergenceError, DomainError, StateError

__all__ = ["Regime", "GasState", "VirialCoefficients",
           "thermal_wavelength", "critical_density", "fugacity_from_density",
           "total_particle_number", "log_partition", "pressure",
           "virial_closed_form", "critical_temperature", "tc_ratio",
           "internal_energy", "specific_heat", "specific_heat_jump",
           "entropy", "condensate_fraction"]

HALF = BoseOrder(1, 2)
THREE_HALVES = BoseOrder(3, 2)
FIVE_HALVES = BoseOrder(5, 2)

# λ³/v this close below g_{3/2}(1) already counts as condensed
CONDENSATION_SLACK = 1e-12
SOLVER_TOL = 1e-12
POLISH_STEPS = 3
# Rounded g_{3/2}(1) at μ = 0, for reproducing published tables
LITERAL_ZETA_3_2 = 2.61


class Regime(enum.Enum):
    above_tc = "above-tc"
    below_tc = "below-tc"


def _positive(name, value, allow_inf=False):
    value = float(value)
    if math.isnan(value) or value <= 0 or (math.isinf(value) and not allow_inf):
        raise DomainError("{!s} must be positive, got {!r}".format(name, value))
    return value


def thermal_wavelength(T):
    """λ = sqrt(2π/T)."""
    T = _positive("T", T)
    return math.sqrt(2 * math.pi / T)


def critical_density(mu, ctl=None):
    """g_{3/2}^(μ)(1), the value of λ³/v at the onset of condensation."""
    return mu_polylog(THREE_HALVES, 1.0, mu, ctl)


def fugacity_from_density(y, mu, ctl=None):
    """Solve g_{3/2}^(μ)(z) = y for the fugacity.

    :param float y: λ³/v
    :param mu: μ (real or DeformationParameter)
    :return: (z, Regime); z = 1 once y reaches g_{3/2}^(μ)(1)
    :rtype: tuple
    """
    mu = float(as_mu(mu))
    y = float(y)
    if math.isnan(y) or y < 0:
        raise DomainError("λ³/v must be nonnegative, got {!r}".format(y))
    if y == 0:
        return 0.0, Regime.above_tc
    top = critical_density(mu, ctl)
    if y >= top - CONDENSATION_SLACK:
        return 1.0, Regime.below_tc

    def residual(z):
        if z >= 1:
            return top - y
        return mu_polylog(THREE_HALVES, z, mu, ctl) - y

    z, info = optimize.brentq(residual, 0.0, 1.0, xtol=1e-15, full_output=True)
    # Newton polish, using z d/dz g_{3/2} = g_{1/2}
    for _ in range(POLISH_STEPS):
        res = residual(z)
        if abs(res) <= SOLVER_TOL:
            break
        step = res * z / mu_polylog(HALF, z, mu, ctl)
        z = min(max(z - step, 0.0), math.nextafter(1.0, 0.0))
    LOGGER.debug("Fugacity for λ³/v=%r, μ=%r: z=%r after %d bracketing iterations",
                 y, mu, z, info.iterations)
    return z, Regime.above_tc


class GasState(object):
    def __init__(self, mu, T, v, z, regime=None):
        """
        :param mu: μ (real or DeformationParameter)
        :param float T: Reduced temperature
        :param float v: Specific volume per particle (inf for the empty gas)
        :param float z: Fugacity
        :param Regime regime: Defaults to below_tc iff z = 1
        """
        self.mu = float(as_mu(mu))
        self.T = _positive("T", T)
        self.v = _positive("v", v, allow_inf=True)
        z = float(z)
        if not 0 <= z <= 1:
            raise DomainError("Fugacity must lie in [0, 1], got {!r}".format(z))
        self.z = z
        if regime is None:
            regime = Regime.below_tc if z == 1 else Regime.above_tc
        if regime == Regime.below_tc and z != 1:
            raise StateError("A condensed state must have z = 1, got z={!r}".format(z))
        self.regime = regime
        self.wavelength = thermal_wavelength(self.T)

    @classmethod
    def from_density(cls, mu, T, v, ctl=None):
        """State at (T, v) with the fugacity solved from λ³/v = g_{3/2}^(μ)(z)."""
        v = _positive("v", v)
        y = thermal_wavelength(T) ** 3 / v
        z, regime = fugacity_from_density(y, mu, ctl)
        return cls(mu, T, v, z, regime)

    @classmethod
    def from_fugacity(cls, mu, T, z, ctl=None):
        """Uncondensed state at (T, z); v follows from λ³/v = g_{3/2}^(μ)(z)."""
        z = float(z)
        if z == 0:
            return cls(mu, T, math.inf, 0.0)
        g = mu_polylog(THREE_HALVES, z, mu, ctl)
        return cls(mu, T, thermal_wavelength(T) ** 3 / g, z)

    def __repr__(self): # pragma: no cover
        return "<GasState μ={0.mu!r} T={0.T!r} v={0.v!r} z={0.z!r} {0.regime.value}>".format(self)

    @property
    def density_ratio(self):
        """λ³/v."""
        return self.wavelength ** 3 / self.v

    @property
    def volume_ratio(self):
        """v/λ³."""
        return self.v / self.wavelength ** 3

    @property
    def condensed(self):
        return self.regime == Regime.below_tc


class VirialCoefficients(object):
    """Coefficients of Pv/kT = 1 + A y + B y^2 + C y^3 + D y^4, y = λ³/v."""

    def __init__(self, a2, a3, a4, a5):
        self.a2 = a2
        self.a3 = a3
        self.a4 = a4
        self.a5 = a5

    def __repr__(self): # pragma: no cover
        return "<VirialCoefficients A={0.a2!r} B={0.a3!r} C={0.a4!r} D={0.a5!r}>".format(self)

    def __iter__(self):
        return iter((self.a2, self.a3, self.a4, self.a5))

    def equation_of_state(self, y):
        """Pv/kT truncated after the fifth virial coefficient."""
        return 1 + y * (self.a2 + y * (self.a3 + y * (self.a4 + y * self.a5)))


def virial_closed_form(mu):
    """Second to fifth virial coefficients, μ-unity powers included."""
    mu = float(as_mu(mu))
    b1, b2, b3, b4, b5 = (mu_bracket(n, mu) for n in range(1, 6))
    a2 = -b2 / (2 ** 3.5 * b1 ** 2)
    a3 = b2 ** 2 / (2 ** 5 * b1 ** 4) - 2 * b3 / (3 ** 3.5 * b1 ** 3)
    a4 = (-5 * b2 ** 3 / (2 ** 8.5 * b1 ** 6)
          + b2 * b3 / (2 ** 2.5 * 3 ** 1.5 * b1 ** 5)
          - 3 * b4 / (2 ** 7 * b1 ** 4))
    a5 = (7 * b2 ** 4 / (2 ** 10 * b1 ** 8)
          - b2 ** 2 * b3 / (2 ** 3 * 3 ** 1.5 * b1 ** 7)
          + 2 * b3 ** 2 / (3 ** 5 * b1 ** 6)
          + b2 * b4 / (2 ** 5.5 * b1 ** 6)
          - 4 * b5 / (5 ** 3.5 * b1 ** 5))
    return VirialCoefficients(a2, a3, a4, a5)


def critical_temperature(v, mu, ctl=None):
    """Tc = 2π / (v g_{3/2}^(μ)(1))^(2/3)."""
    v = _positive("v", v)
    return 2 * math.pi / (v * critical_density(mu, ctl)) ** (2 / 3)


def tc_ratio(mu, literal=False, ctl=None):
    """Tc^(μ)/Tc; literal=True uses the printed 2.61 instead of g_{3/2}^(0)(1)."""
    numerator = LITERAL_ZETA_3_2 if literal else critical_density(0.0, ctl)
    return (numerator / critical_density(mu, ctl)) ** (2 / 3)


def _fugacity(state):
    if state.condensed:
        if state.z != 1:
            raise StateError("Condensed state with z={!r}".format(state.z))
        return 1.0
    return state.z


def total_particle_number(state, V, include_ground=True, ctl=None):
    """Thermal and ground-state particle numbers.

    :param GasState state: Gas state
    :param float V: Volume
    :param bool include_ground: False skips the ground term (needed at z = 1)
    :return: (N_total, N_ground)
    :rtype: tuple
    """
    V = _positive("V", V)
    thermal = V / state.wavelength ** 3 * mu_polylog(THREE_HALVES, state.z, state.mu, ctl)
    ground = mu_polylog(0, state.z, state.mu, ctl) if include_ground else 0.0
    return thermal + ground, ground


def log_partition(state, V, ctl=None):
    """ln Z = (V/λ³) g_{5/2}^(μ)(z) + g_1^(μ)(z)."""
    V = _positive("V", V)
    return (V / state.wavelength ** 3 * mu_polylog(FIVE_HALVES, state.z, state.mu, ctl)
            + mu_polylog(1, state.z, state.mu, ctl))


def pressure(state, ctl=None):
    """P = (T/λ³) g_{5/2}^(μ)(z), ground-state term dropped."""
    return state.T / state.wavelength ** 3 * mu_polylog(FIVE_HALVES, _fugacity(state), state.mu, ctl)


def internal_energy(state, N, ctl=None):
    """U = (3/2) N T (v/λ³) g_{5/2}^(μ)(z), with z = 1 below Tc."""
    N = _positive("N", N)
    z = _fugacity(state)
    if z == 0:
        return 0.0
    return 1.5 * N * state.T * state.volume_ratio * mu_polylog(FIVE_HALVES, z, state.mu, ctl)


def specific_heat(state, ctl=None):
    """Cv/(Nk) on either side of the transition.

    Above Tc the correction (9/4) g_{3/2}/g_{1/2} vanishes where g_{1/2}(1)
    diverges (μ = 0, z -> 1); z -> 0 gives the classical 3/2.
    """
    z = _fugacity(state)
    if state.condensed:
        return 3.75 * state.volume_ratio * mu_polylog(FIVE_HALVES, 1.0, state.mu, ctl)
    if z == 0:
        return 1.5
    g32 = mu_polylog(THREE_HALVES, z, state.mu, ctl)
    first = 3.75 * mu_polylog(FIVE_HALVES, z, state.mu, ctl) * state.volume_ratio
    try:
        g12 = mu_polylog(HALF, z, state.mu, ctl)
    except DivergenceError:
        LOGGER.debug("g_1/2(1) diverges at μ=%r, dropping the Cv correction", state.mu)
        return first
    return first - 2.25 * g32 / g12


def specific_heat_jump(mu, ctl=None):
    """Drop of Cv/(Nk) across Tc: (9/4) g_{3/2}(1)/g_{1/2}(1), zero at μ = 0."""
    mu = float(as_mu(mu))
    if mu == 0:
        return 0.0
    return 2.25 * critical_density(mu, ctl) / mu_polylog(HALF, 1.0, mu, ctl)


def entropy(state, ctl=None):
    """S/(Nk) = (5/2)(v/λ³) g_{5/2}^(μ)(z) − ln z, z = 1 below Tc."""
    z = _fugacity(state)
    if z <= 0:
        raise DomainError("Entropy needs z > 0, got z={!r}".format(z))
    return 2.5 * state.volume_ratio * mu_polylog(FIVE_HALVES, z, state.mu, ctl) - math.log(z)


def condensate_fraction(state, v=None, ctl=None):
    """N_0/N = 1 − (v/λ³) g_{3/2}^(μ)(1) below Tc, clamped to [0, 1]; 0 above."""
    if not state.condensed:
        return 0.0
    v = state.v if v is None else _positive("v", v)
    fraction = 1 - v / state.wavelength ** 3 * critical_density(state.mu, ctl)
    return min(max(fraction, 0.0), 1.0)
