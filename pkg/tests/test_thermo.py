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

import math
import unittest

from mubose import thermo
from mubose.core import mu_polylog
from mubose.errors import DivergenceError, DomainError, StateError
from mubose.thermo import GasState, Regime

ZETA_3_2 = 2.6123753486854883
ZETA_5_2 = 1.3414872572509171
TWO_PI = 2 * math.pi


class TestFugacity(unittest.TestCase):
    def test_wavelength(self):
        self.assertAlmostEqual(thermo.thermal_wavelength(TWO_PI), 1.0, places=15)
        with self.assertRaises(DomainError):
            thermo.thermal_wavelength(0)

    def test_critical_density(self):
        self.assertAlmostEqual(thermo.critical_density(0), ZETA_3_2, places=11)
        self.assertLess(thermo.critical_density(0.4), ZETA_3_2)

    def test_inverts_density(self):
        for mu, z in ((0.0, 0.5), (0.3, 0.2), (0.6, 0.7)):
            y = mu_polylog("3/2", z, mu)
            solved, regime = thermo.fugacity_from_density(y, mu)
            self.assertAlmostEqual(solved, z, places=10)
            self.assertEqual(regime, Regime.above_tc)

    def test_residual_over_density_grid(self):
        for mu in (0.0, 0.1, 0.4, 0.7):
            top = thermo.critical_density(mu)
            targets = [top * k / 10 for k in range(1, 10)] + [top - 1e-3, top - 1e-4]
            for y in targets:
                z, regime = thermo.fugacity_from_density(y, mu)
                self.assertEqual(regime, Regime.above_tc)
                self.assertLess(z, 1.0)
                self.assertLessEqual(abs(mu_polylog("3/2", z, mu) - y), 1e-10, msg=(mu, y))

    def test_just_above_tc(self):
        tc = thermo.critical_temperature(1.0, 0)
        state = GasState.from_density(0.0, 1.001 * tc, 1.0)
        self.assertEqual(state.regime, Regime.above_tc)
        self.assertGreater(state.z, 0.999)
        at_tc = thermo.internal_energy(GasState(0.0, tc, 1.0, 1.0), 1.0)
        above = thermo.internal_energy(state, 1.0)
        self.assertGreater(above, at_tc)
        self.assertLess(above - at_tc, 0.01 * at_tc)

    def test_condensed(self):
        self.assertEqual(thermo.fugacity_from_density(3.0, 0.0), (1.0, Regime.below_tc))
        top = thermo.critical_density(0.5)
        self.assertEqual(thermo.fugacity_from_density(top, 0.5), (1.0, Regime.below_tc))
        self.assertEqual(thermo.fugacity_from_density(0, 0.5), (0.0, Regime.above_tc))
        with self.assertRaises(DomainError):
            thermo.fugacity_from_density(-1, 0.5)

    def test_state(self):
        with self.assertRaises(StateError):
            GasState(0.3, 1.0, 1.0, 0.5, Regime.below_tc)
        with self.assertRaises(DomainError):
            GasState(0.3, 1.0, 1.0, 1.5)
        self.assertTrue(GasState(0.3, 1.0, 1.0, 1.0).condensed)

        state = GasState.from_fugacity(0.3, TWO_PI, 0.4)
        self.assertAlmostEqual(state.density_ratio, mu_polylog("3/2", 0.4, 0.3), places=12)
        again = GasState.from_density(0.3, TWO_PI, state.v)
        self.assertAlmostEqual(again.z, 0.4, places=10)

        empty = GasState.from_fugacity(0.3, TWO_PI, 0)
        self.assertEqual(empty.v, math.inf)
        self.assertEqual(thermo.internal_energy(empty, 1), 0.0)
        self.assertEqual(thermo.specific_heat(empty), 1.5)


class TestCriticalTemperature(unittest.TestCase):
    def test_undeformed(self):
        self.assertAlmostEqual(thermo.tc_ratio(0), 1.0, places=14)
        self.assertAlmostEqual(thermo.critical_temperature(1.0, 0), TWO_PI / ZETA_3_2 ** (2 / 3), places=10)

    def test_ratio_grows(self):
        ratios = [thermo.tc_ratio(k * 0.05) for k in range(19)]
        for lower, higher in zip(ratios, ratios[1:]):
            self.assertLess(lower, higher)
        self.assertGreater(ratios[8], 1.5)

    def test_ratio_small_mu(self):
        tiny = thermo.tc_ratio(1e-8)
        small = thermo.tc_ratio(1e-6)
        self.assertAlmostEqual(small, 1.0008021514693284, places=10)
        self.assertLess(1.0, tiny)
        self.assertLess(tiny, small)
        self.assertLess(tiny - 1, 1e-4)

    def test_literal(self):
        literal = thermo.tc_ratio(0, literal=True)
        self.assertAlmostEqual(literal, (2.61 / ZETA_3_2) ** (2 / 3), places=10)
        self.assertLess(literal, 1.0)

    def test_volume_scaling(self):
        self.assertAlmostEqual(thermo.critical_temperature(8.0, 0.3) * 4, thermo.critical_temperature(1.0, 0.3),
                               places=10)


class TestThermodynamics(unittest.TestCase):
    def test_number_from_partition(self):
        mu, z, V = 0.4, 0.8, 10.0
        h = 1e-5

        def ln_z(zz):
            return thermo.log_partition(GasState(mu, TWO_PI, 1.0, zz), V)

        derivative = z * (ln_z(z + h) - ln_z(z - h)) / (2 * h)
        total, ground = thermo.total_particle_number(GasState(mu, TWO_PI, 1.0, z), V)
        self.assertAlmostEqual(derivative / total, 1.0, places=6)
        self.assertAlmostEqual(ground, mu_polylog(0, z, mu), places=12)

    def test_ground_diverges(self):
        state = GasState(0.3, TWO_PI, 1.0, 1.0)
        with self.assertRaises(DivergenceError):
            thermo.total_particle_number(state, 10.0)
        total, ground = thermo.total_particle_number(state, 10.0, include_ground=False)
        self.assertEqual(ground, 0.0)
        self.assertAlmostEqual(total, 10.0 * thermo.critical_density(0.3), places=10)

    def test_energy_is_three_halves_pv(self):
        for state in (GasState.from_density(0.3, TWO_PI, 2.0), GasState.from_density(0.3, TWO_PI, 0.1)):
            N = 7.0
            self.assertAlmostEqual(thermo.internal_energy(state, N),
                                   1.5 * thermo.pressure(state) * N * state.v, places=10)

    def test_pressure_decreases_with_mu(self):
        pressures = [thermo.pressure(GasState(mu, 2.0, 1.0, 0.7)) for mu in (0.0, 0.1, 0.5, 0.9)]
        self.assertEqual(pressures, sorted(pressures, reverse=True))

    def test_entropy_identity(self):
        for state in (GasState.from_density(0.5, 3.0, 4.0), GasState.from_density(0.5, 3.0, 0.05)):
            N = 10.0
            V = N * state.v
            bulk = thermo.log_partition(state, V) - mu_polylog(1, state.z, state.mu)
            per_particle = bulk / N + thermo.internal_energy(state, N) / (N * state.T)
            self.assertAlmostEqual(thermo.entropy(state), per_particle - math.log(state.z), places=10)
        with self.assertRaises(DomainError):
            thermo.entropy(GasState(0.5, 3.0, math.inf, 0.0))

    def test_undeformed_at_tc(self):
        tc = thermo.critical_temperature(1.0, 0)
        state = GasState(0, tc, 1.0, 1.0)
        self.assertAlmostEqual(thermo.specific_heat(state), 3.75 * ZETA_5_2 / ZETA_3_2, places=9)
        self.assertAlmostEqual(thermo.entropy(state), 2.5 * ZETA_5_2 / ZETA_3_2, places=9)
        self.assertAlmostEqual(thermo.specific_heat(state), 1.9257, places=3)
        above = GasState(0, tc, 1.0, 1.0, Regime.above_tc)
        self.assertAlmostEqual(thermo.specific_heat(above), thermo.specific_heat(state), places=12)

    def test_classical_limit(self):
        for mu in (0.0, 0.4):
            state = GasState.from_fugacity(mu, TWO_PI, 1e-4)
            self.assertAlmostEqual(thermo.specific_heat(state), 1.5, places=3)

    def test_specific_heat_from_energy(self):
        mu, v = 0.3, 1.5

        def energy(T):
            return thermo.internal_energy(GasState.from_density(mu, T, v), 1.0)

        for T in (TWO_PI, 0.5):
            h = 1e-4 * T
            derivative = (energy(T + h) - energy(T - h)) / (2 * h)
            self.assertAlmostEqual(thermo.specific_heat(GasState.from_density(mu, T, v)), derivative, places=5)

    def test_jump(self):
        self.assertEqual(thermo.specific_heat_jump(0), 0.0)
        mu, v = 0.4, 1.0
        tc = thermo.critical_temperature(v, mu)
        below = GasState(mu, tc, v, 1.0)
        above = GasState(mu, tc, v, 1.0, Regime.above_tc)
        jump = thermo.specific_heat(below) - thermo.specific_heat(above)
        self.assertGreater(jump, 0)
        self.assertAlmostEqual(jump, thermo.specific_heat_jump(mu), places=12)

    def test_condensate_fraction(self):
        mu, v = 0.3, 1.0
        tc = thermo.critical_temperature(v, mu)
        state = GasState.from_density(mu, tc / 2, v)
        self.assertTrue(state.condensed)
        self.assertAlmostEqual(thermo.condensate_fraction(state), 1 - 0.5 ** 1.5, places=9)
        self.assertEqual(thermo.condensate_fraction(GasState.from_density(mu, 2 * tc, v)), 0.0)
        self.assertEqual(thermo.condensate_fraction(state, v=100.0), 0.0)

    def test_equation_of_state(self):
        coefficients = thermo.virial_closed_form(0)
        self.assertAlmostEqual(coefficients.a2, -2 ** -2.5, places=14)
        mu = 0.3
        state = GasState.from_fugacity(mu, TWO_PI, 0.05)
        exact = thermo.pressure(state) * state.v / state.T
        y = state.density_ratio
        self.assertAlmostEqual(thermo.virial_closed_form(mu).equation_of_state(y), exact, places=8)
        self.assertEqual(len(list(coefficients)), 4)
